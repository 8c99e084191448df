"""
Serviço de partições separadoras S -> {1,2,3,4}, homomorfismos φ_p e o
homomorfismo produto β.
"""
import itertools
import logging
import random
from decimal import Decimal, localcontext
from math import comb
from typing import Dict, List, Optional, Sequence, Tuple

from sympy.combinatorics import Permutation, PermutationGroup

from src.models.complex import PermutationQuotient
from src.models.coxeter import CoxeterPresentation
from src.models.errors import SizeCapExceeded, TorsionCheckError
from src.models.partition import (
    PARTS,
    DegreeBound,
    FamilyResult,
    Partition,
    PartitionFamily,
    ProductQuotient,
    Quadruple,
)
from src.services.complex_service import DEFAULT_SIZE_CAP, ComplexService
from src.services.coxeter_service import CoxeterService

logger = logging.getLogger(__name__)

DEFAULT_GREEDY_POOL = 4096
# Até este posto o greedy percorre todas as 4^r partições.
EXHAUSTIVE_GREEDY_RANK = 8

# Dígitos usados na comparação com a cota polinomial.
BOUND_PRECISION = 60


class PartitionService:
    """
    Serviço para famílias de partições que separam quádruplas.
    """
    def __init__(
        self,
        coxeter_svc: CoxeterService,
        complex_svc: ComplexService,
        size_cap: int = DEFAULT_SIZE_CAP,
        greedy_pool: int = DEFAULT_GREEDY_POOL,
    ):
        """
        Inicializa o serviço.

        Args:
            coxeter_svc: Serviço de apresentações
            complex_svc: Serviço de complexos (critério de torção)
            size_cap: Limite de pontos materializados pelo homomorfismo produto
            greedy_pool: Candidatos aleatórios por passo do greedy quando r > 8
        """
        self.coxeter_svc = coxeter_svc
        self.complex_svc = complex_svc
        self.size_cap = size_cap
        self.greedy_pool = greedy_pool

    @staticmethod
    def quadruples(r: int) -> List[Quadruple]:
        return list(itertools.combinations(range(1, r + 1), 4))

    def separates(self, p: Partition, quad: Sequence[int]) -> bool:
        """Verdadeiro sse p(a), p(b), p(c), p(d) são distintos."""
        if len(quad) != 4 or len(set(quad)) != 4:
            raise ValueError(f"Quádrupla deve ter 4 índices distintos: {tuple(quad)}")
        for index in quad:
            if not 1 <= index <= p.r:
                raise ValueError(f"Índice {index} fora de 1..{p.r}")
        return len({p[index] for index in quad}) == 4

    def k_required(self, r: int) -> int:
        """
        Menor k com C(r,4)·(29/32)^k <= 1, ou seja ⌈log C(r,4) / log(32/29)⌉,
        nunca menor que 1.

        A comparação é feita em inteiros: 32^k >= C(r,4)·29^k.
        """
        if r < 4:
            raise ValueError(f"k_required exige r >= 4, recebido {r}")
        quads = comb(r, 4)
        k = 0
        while 32 ** k < quads * 29 ** k:
            k += 1
        return max(1, k)

    def random_partition(self, r: int, rng: random.Random) -> Partition:
        return Partition(tuple(rng.randint(1, 4) for _ in range(r)))

    def random_family(self, r: int, k: int, seed: int, max_attempts: int) -> FamilyResult:
        """
        Sorteia k partições uniformes por tentativa até obter uma família separadora.

        Args:
            r: Tamanho do conjunto base
            k: Partições por tentativa
            seed: Semente do gerador
            max_attempts: Número máximo de tentativas

        Returns:
            FamilyResult com a família ou a melhor tentativa
        """
        if k < 1:
            raise ValueError(f"k deve ser >= 1, recebido {k}")
        if max_attempts < 1:
            raise ValueError(f"max_attempts deve ser >= 1, recebido {max_attempts}")
        master = random.Random(seed)
        best: Optional[Tuple[int, PartitionFamily]] = None
        for attempt in range(1, max_attempts + 1):
            rng = random.Random(master.getrandbits(64))
            family = PartitionFamily(r, tuple(self.random_partition(r, rng) for _ in range(k)))
            unseparated = len(self.verify_family(family))
            if unseparated == 0:
                logger.info(f"Família separadora encontrada na tentativa {attempt}")
                return FamilyResult(found=True, family=family, attempts=attempt,
                                    best_unseparated=0, best_family=family)
            logger.debug(f"Tentativa {attempt}: {unseparated} quádruplas não separadas")
            if best is None or unseparated < best[0]:
                best = (unseparated, family)

        logger.warning(f"Nenhuma família separadora após {max_attempts} tentativas")
        return FamilyResult(found=False, family=None, attempts=max_attempts,
                            best_unseparated=best[0], best_family=best[1])

    @staticmethod
    def _separation_mask(values: Sequence[int], quads: List[Quadruple]) -> int:
        mask = 0
        for bit, quad in enumerate(quads):
            if len({values[index - 1] for index in quad}) == 4:
                mask |= 1 << bit
        return mask

    def greedy_family(self, r: int, seed: int = 0) -> PartitionFamily:
        """
        Família separadora construída gulosamente: cada passo escolhe a partição que
        separa mais quádruplas ainda não separadas.

        Com r <= 8 os candidatos são todas as 4^r partições; acima disso, um conjunto
        aleatório (semeado) seguido de melhoria local coordenada a coordenada.
        """
        if r < 4:
            raise ValueError(f"greedy_family exige r >= 4, recebido {r}")
        quads = self.quadruples(r)
        remaining = (1 << len(quads)) - 1
        chosen: List[Partition] = []

        if r <= EXHAUSTIVE_GREEDY_RANK:
            candidates = [
                (values, self._separation_mask(values, quads))
                for values in itertools.product(PARTS, repeat=r)
            ]
            while remaining:
                values, mask = max(candidates, key=lambda item: (item[1] & remaining).bit_count())
                chosen.append(Partition(tuple(values)))
                remaining &= ~mask
        else:
            rng = random.Random(seed)
            while remaining:
                values = self._best_pooled(r, quads, remaining, rng)
                chosen.append(Partition(values))
                remaining &= ~self._separation_mask(values, quads)

        family = PartitionFamily(r, tuple(chosen))
        logger.info(f"Família gulosa com {len(family)} partições (k_required = {self.k_required(r)})")
        return family

    def _best_pooled(self, r: int, quads: List[Quadruple], remaining: int, rng: random.Random) -> Tuple[int, ...]:
        def score(values: Sequence[int]) -> int:
            return (self._separation_mask(values, quads) & remaining).bit_count()

        pool = [tuple(rng.randint(1, 4) for _ in range(r)) for _ in range(self.greedy_pool)]
        best = max(pool, key=score)
        if score(best) == 0:
            # separa a primeira quádrupla restante
            first = quads[(remaining & -remaining).bit_length() - 1]
            values = list(best)
            for part, index in zip(PARTS, first):
                values[index - 1] = part
            best = tuple(values)

        best_score = score(best)
        improved = True
        while improved:
            improved = False
            for index in range(r):
                for part in PARTS:
                    if part == best[index]:
                        continue
                    candidate = best[:index] + (part,) + best[index + 1:]
                    candidate_score = score(candidate)
                    if candidate_score > best_score:
                        best, best_score, improved = candidate, candidate_score, True
        return best

    def verify_family(self, f: PartitionFamily) -> List[Quadruple]:
        """Quádruplas (1-based) não separadas por nenhuma partição da família."""
        return [
            quad for quad in self.quadruples(f.r)
            if not any(len({p[index] for index in quad}) == 4 for p in f.partitions)
        ]

    def phi_p(self, p_high: CoxeterPresentation, part: Partition) -> Dict[int, int]:
        """
        Mapa de geradores a_i -> a_p(i) de G_(r,m) em G_(4,m).
        """
        if p_high.rank != part.r:
            raise ValueError(f"Partição sobre {part.r} elementos para posto {p_high.rank}")
        if p_high.rank >= 2 and p_high.uniform_exponent() is None:
            raise ValueError("φ_p exige apresentação de expoente uniforme")
        return {i: part[i] for i in p_high.generators}

    def product_homomorphism(
        self,
        r: int,
        m: int,
        f: PartitionFamily,
        q4: PermutationQuotient,
    ) -> ProductQuotient:
        """
        Homomorfismo β = (ψ∘φ_p1, …, ψ∘φ_pk) de G_(r,m) em Q^k.

        β atua na união disjunta de k cópias dos pontos de ψ: na cópia c,
        a_i age como ψ(a_{p_c(i)}). A ação é fiel em Q^k, então as ordens das
        imagens coincidem com as ordens em Q^k.

        Args:
            r: Posto de G_(r,m)
            m: Expoente uniforme
            f: Família separadora sobre r elementos
            q4: Quociente de G_(4,m) com núcleo livre de torção

        Returns:
            ProductQuotient com o quociente, a ordem do grupo imagem e a cota de grau
        """
        if f.r != r:
            raise ValueError(f"Família sobre {f.r} elementos para r = {r}")
        if not f.partitions:
            raise ValueError("Família vazia")
        p4 = self.coxeter_svc.uniform(4, m)
        check = self.complex_svc.check_torsion_free_kernel(p4, q4)
        if not check.torsion_free:
            raise TorsionCheckError(f"Quociente de G_(4,{m}) inválido: {check.diagnostic}")

        n = q4.degree
        degree = n * len(f)
        if degree > self.size_cap:
            raise SizeCapExceeded(f"Ação produto com {degree} pontos acima do limite {self.size_cap}")

        p_high = self.coxeter_svc.uniform(r, m)
        maps = [self.phi_p(p_high, part) for part in f.partitions]
        images = []
        for i in p_high.generators:
            array = []
            for copy, index_map in enumerate(maps):
                offset = copy * n
                image = q4.image(index_map[i])
                array.extend(offset + value for value in image.array_form)
            images.append(Permutation(array))
        quotient = PermutationQuotient(degree=degree, generator_images=tuple(images))

        check = self.complex_svc.check_torsion_free_kernel(p_high, quotient)
        if not check.torsion_free:
            logger.error(f"Homomorfismo produto falhou: {check.diagnostic}")
            raise TorsionCheckError(check.diagnostic)

        group_order = int(PermutationGroup(list(images)).order())
        q_size = int(PermutationGroup(list(q4.generator_images)).order())
        bound = self.degree_bound(r, q_size, len(f), group_order)
        logger.info(f"β: grau {degree}, grupo imagem de ordem {group_order}")
        return ProductQuotient(
            quotient=quotient,
            family=f,
            group_order=group_order,
            bound=bound,
            torsion_free=True,
            coordinates=[copy * n for copy in range(len(f))],
        )

    def degree_bound(self, r: int, q_size: int, k: int, group_order: int) -> DegreeBound:
        """
        Compara a ordem do grupo imagem com |Q|^k e com |Q|·r^(4 log|Q| / log(32/29)).
        """
        if r < 1 or q_size < 1 or k < 1:
            raise ValueError(f"Parâmetros inválidos: r = {r}, |Q| = {q_size}, k = {k}")
        q_power = q_size ** k
        with localcontext() as ctx:
            ctx.prec = BOUND_PRECISION
            log_q = Decimal(q_size).ln()
            exact_log = log_q + 4 * log_q / (Decimal(32) / Decimal(29)).ln() * Decimal(r).ln()
            within_polynomial = Decimal(group_order).ln() <= exact_log
        return DegreeBound(
            group_order=group_order,
            q_size=q_size,
            k=k,
            q_power=q_power,
            polynomial_log=float(exact_log),
            within_q_power=group_order <= q_power,
            within_polynomial=within_polynomial,
        )
