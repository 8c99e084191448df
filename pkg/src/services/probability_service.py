"""
Serviço probabilístico: fórmulas P1/P2, cota de falha, modelo de link aleatório,
enumeração exata, Monte Carlo, posto limiar e cota de Ramsey.
"""
import itertools
import math
import logging
import random
from decimal import Decimal, localcontext
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Dict, List, Sequence, Tuple

import networkx as nx

from src.models.probability import (
    ExactFailure,
    LinkModel,
    LinkSample,
    MonteCarloResult,
    NonuniformThreshold,
    WallBits,
)

logger = logging.getLogger(__name__)

MAX_EXACT_BITS = 24
MARGIN_PRECISION = 60
# Maior caixa resolvida pela recorrência de Ramsey com três ou mais cores.
RAMSEY_STATE_CAP = 1_000_000
# Margens menores que isso são recalculadas com o dobro de dígitos.
MARGIN_GUARD = Decimal("1e-40")


def _nonempty_connected(vertices: List[int], edges: List[tuple]) -> bool:
    if not vertices:
        return False
    graph = nx.Graph()
    graph.add_nodes_from(vertices)
    graph.add_edges_from(edges)
    return nx.is_connected(graph)


def _third_vertex_condition(vertices: List[int], adjacency: Dict[int, set]) -> bool:
    for v1, v2 in itertools.combinations(vertices, 2):
        if not adjacency[v1] & adjacency[v2]:
            return False
    return True


@lru_cache(maxsize=1 << 16)
def classify_pattern(model: LinkModel, pattern: int) -> LinkSample:
    """
    Resultado determinístico de um padrão de bits de paredes.

    Um vértice é ascendente quando seu bit vale 1. Uma aresta é ascendente quando
    os dois extremos e todas as m-2 paredes internas valem 1, e descendente
    quando todos valem 0.
    """
    bits = WallBits.from_pattern(model, pattern)
    up = [v for v in range(model.r) if bits.vertex_bits[v]]
    down = [v for v in range(model.r) if not bits.vertex_bits[v]]
    up_edges = []
    down_edges = []
    for (u, v), interior in zip(itertools.combinations(range(model.r), 2), bits.edge_bits):
        ends = (bits.vertex_bits[u], bits.vertex_bits[v])
        if all(ends) and all(interior):
            up_edges.append((u, v))
        elif not any(ends) and not any(interior):
            down_edges.append((u, v))

    adjacency = {v: set() for v in up}
    for u, v in up_edges:
        adjacency[u].add(v)
        adjacency[v].add(u)

    sample = LinkSample(
        ascending_nonempty=bool(up),
        ascending_connected=_nonempty_connected(up, up_edges),
        descending_nonempty=bool(down),
        descending_connected=_nonempty_connected(down, down_edges),
        condition_one=bool(up),
        condition_two=_third_vertex_condition(up, adjacency),
    )
    if sample.condition_one and sample.condition_two and sample.ascending_fails:
        raise AssertionError(f"Há vértice ascendente e todo par tem vizinho comum, mas Γ↑ falha no padrão {pattern}")
    return sample


class ProbabilityService:
    """
    Estimativas da probabilidade de falha dos links ascendente e descendente.
    """

    def p1(self, r: int) -> Fraction:
        """Probabilidade de não haver vértice ascendente: 2^-r."""
        if r < 1:
            raise ValueError(f"r deve ser >= 1, recebido {r}")
        return Fraction(1, 2 ** r)

    def p2_bound(self, r: int, m: int) -> Fraction:
        """C(r,2)·(1/4)·(1 - 2^(3-2m))^(r-2)."""
        self._check_rm(r, m)
        return comb(r, 2) * Fraction(1, 4) * (1 - Fraction(1, 2 ** (2 * m - 3))) ** (r - 2)

    def total_failure_bound(self, r: int, m: int) -> Fraction:
        """Cota para P(link↑ ou link↓ falha): 2^(1-r) + C(r,2)·(1/2)·(1 - 2^(3-2m))^(r-2)."""
        self._check_rm(r, m)
        return Fraction(2, 2 ** r) + comb(r, 2) * Fraction(1, 2) * (1 - Fraction(1, 2 ** (2 * m - 3))) ** (r - 2)

    @staticmethod
    def _check_rm(r: int, m: int) -> None:
        if r < 2:
            raise ValueError(f"r deve ser >= 2, recebido {r}")
        if m < 3:
            raise ValueError(f"m deve ser >= 3, recebido {m}")

    def classify_pattern(self, model: LinkModel, pattern: int) -> LinkSample:
        if not 0 <= pattern < 1 << model.bit_count:
            raise ValueError(f"Padrão fora de 0..2^{model.bit_count}-1")
        return classify_pattern(model, pattern)

    def sample_link_model(self, model: LinkModel, rng: random.Random) -> LinkSample:
        return classify_pattern(model, rng.getrandbits(model.bit_count))

    def exact_failure_small(self, model: LinkModel) -> ExactFailure:
        """
        Probabilidades exatas de falha por enumeração de todos os padrões de bits.
        """
        if model.bit_count > MAX_EXACT_BITS:
            raise ValueError(
                f"Modelo (r={model.r}, m={model.m}) tem {model.bit_count} bits; limite é {MAX_EXACT_BITS}"
            )
        total = 1 << model.bit_count
        ascending = descending = either = no_ascending = 0
        for pattern in range(total):
            sample = classify_pattern(model, pattern)
            ascending += sample.ascending_fails
            descending += sample.descending_fails
            either += sample.ascending_fails or sample.descending_fails
            no_ascending += not sample.ascending_nonempty
        return ExactFailure(
            model=model,
            ascending=Fraction(ascending, total),
            descending=Fraction(descending, total),
            either=Fraction(either, total),
            no_ascending_vertex=Fraction(no_ascending, total),
        )

    def monte_carlo_failure(self, model: LinkModel, trials: int, seed: int, streams: int = 1) -> MonteCarloResult:
        """
        Estimativa de Monte Carlo das probabilidades de falha.

        Args:
            model: Modelo de link
            trials: Número total de amostras
            seed: Semente mestra; cada fluxo recebe uma subsemente
            streams: Número de fluxos independentes (somados ao final)

        Returns:
            MonteCarloResult com as contagens
        """
        if trials < 1:
            raise ValueError(f"trials deve ser >= 1, recebido {trials}")
        if streams < 1:
            raise ValueError(f"streams deve ser >= 1, recebido {streams}")
        master = random.Random(seed)
        result = MonteCarloResult(trials=0)
        base, extra = divmod(trials, streams)
        for stream in range(streams):
            rng = random.Random(master.getrandbits(64))
            result = result.merge(self._run_stream(model, base + (stream < extra), rng))
        logger.info(
            f"Monte Carlo (r={model.r}, m={model.m}): {result.either_failures}/{result.trials} falhas"
        )
        return result

    def _run_stream(self, model: LinkModel, trials: int, rng: random.Random) -> MonteCarloResult:
        ascending = descending = either = no_ascending = no_descending = 0
        for _ in range(trials):
            sample = self.sample_link_model(model, rng)
            ascending += sample.ascending_fails
            descending += sample.descending_fails
            either += sample.ascending_fails or sample.descending_fails
            no_ascending += not sample.ascending_nonempty
            no_descending += not sample.descending_nonempty
        return MonteCarloResult(
            trials=trials,
            ascending_failures=ascending,
            descending_failures=descending,
            either_failures=either,
            no_ascending_vertex=no_ascending,
            no_descending_vertex=no_descending,
        )

    def sweep(self, rs: Sequence[int], m: int, trials: int, seed: int) -> List[Dict[str, object]]:
        """
        Tabela de estimativas por r, com a cota e o valor exato quando enumerável.
        """
        master = random.Random(seed)
        rows = []
        for r in rs:
            model = LinkModel(r, m)
            result = self.monte_carlo_failure(model, trials, master.getrandbits(64))
            exact = self.exact_failure_small(model).either if model.bit_count <= MAX_EXACT_BITS else None
            rows.append({
                "r": r,
                "m": m,
                "trials": trials,
                "ascending_failure": result.estimate(result.ascending_failures),
                "either_failure": result.estimate(result.either_failures),
                "either_stderr": result.standard_error(result.either_failures),
                "bound": float(self.total_failure_bound(r, m)) if r >= 2 else None,
                "exact_either": str(exact) if exact is not None else "",
            })
        return rows

    def threshold_margin(self, r: int, m: int, q_size: int) -> Decimal:
        """
        ln(lado direito) - ln(lado esquerdo) da desigualdade
        cota(r, m) < 1 / (|Q|·r^(4 ln|Q| / ln(32/29))).

        Positivo quando a desigualdade vale.
        """
        self._check_rm(r, m)
        if q_size < 2:
            raise ValueError(f"|Q| deve ser >= 2, recebido {q_size}")
        margin = self._margin_at(r, m, q_size, MARGIN_PRECISION)
        if abs(margin) < MARGIN_GUARD:
            margin = self._margin_at(r, m, q_size, 2 * MARGIN_PRECISION)
        return margin

    @staticmethod
    def _margin_at(r: int, m: int, q_size: int, precision: int) -> Decimal:
        with localcontext() as ctx:
            ctx.prec = precision
            two = Decimal(2)
            connectivity = 1 - two ** (3 - 2 * m)
            lhs = two ** (1 - r) + Decimal(comb(r, 2)) / 2 * connectivity ** (r - 2)
            log_q = Decimal(q_size).ln()
            exponent = 4 * log_q / (Decimal(32) / Decimal(29)).ln()
            log_rhs = -log_q - exponent * Decimal(r).ln()
            return log_rhs - lhs.ln()

    def threshold_rank(self, m: int, q_size: int) -> int:
        """
        Menor r >= 4 em que a desigualdade vale; vale em r e falha em r-1.
        """
        if m < 3:
            raise ValueError(f"m deve ser >= 3, recebido {m}")
        if q_size < 2:
            raise ValueError(f"|Q| deve ser >= 2, recebido {q_size}")

        def holds(r: int) -> bool:
            return self.threshold_margin(r, m, q_size) > 0

        if holds(4):
            return 4
        low, high = 4, 8
        while not holds(high):
            low, high = high, high * 2
        while high - low > 1:
            middle = (low + high) // 2
            if holds(middle):
                high = middle
            else:
                low = middle
        if holds(high - 1) or not holds(high):
            raise AssertionError(f"Limiar não bilateral em r = {high}")
        logger.info(f"Posto limiar para m={m}, |Q|={q_size}: {high}")
        return high

    def ramsey_upper_bound(self, orders: Sequence[int]) -> int:
        """
        Cota superior de R(n_1, …, n_c) pela recorrência
        R(n) <= 2 - c + Σ_i R(n - e_i), com ordens 2 descartadas e R(n) = n.

        Duas cores usam a forma fechada C(a+b-2, a-1). Com três ou mais cores a
        recorrência é resolvida de baixo para cima na caixa Π[2, n_i]; acima de
        RAMSEY_STATE_CAP estados vale a cota multinomial (Σ(n_i-1))! / Π(n_i-1)!.
        """
        if not orders:
            raise ValueError("Lista de ordens vazia")
        for order in orders:
            if order < 2:
                raise ValueError(f"Ordens devem ser >= 2, recebido {order}")
        reduced = tuple(sorted(order for order in orders if order != 2))
        if len(reduced) <= 2:
            return _ramsey_small(reduced)
        states = math.prod(order - 1 for order in reduced)
        if states > RAMSEY_STATE_CAP:
            logger.warning(f"Recorrência de Ramsey com {states} estados; usando a cota multinomial")
            return _multinomial_bound(reduced)
        return _ramsey_table(reduced)

    def nonuniform_threshold(self, max_exponent: int, q_size: int) -> NonuniformThreshold:
        """
        Posto a partir do qual toda apresentação com expoentes em 3..M é coberta:
        colore cada par pelo seu expoente e aplica Ramsey aos postos limiares R_3, …, R_M.

        Args:
            max_exponent: Maior expoente finito M (>= 3)
            q_size: Ordem do quociente de G_(4,m)

        Returns:
            NonuniformThreshold com os postos por expoente e a cota de Ramsey
        """
        if max_exponent < 3:
            raise ValueError(f"M deve ser >= 3, recebido {max_exponent}")
        ranks = {m: self.threshold_rank(m, q_size) for m in range(3, max_exponent + 1)}
        bound = self.ramsey_upper_bound(list(ranks.values()))
        logger.info(f"Limiar não uniforme para M={max_exponent}, |Q|={q_size}: cota com {bound.bit_length()} bits")
        return NonuniformThreshold(max_exponent=max_exponent, q_size=q_size, ranks=ranks, bound=bound)


def _ramsey_small(reduced: Tuple[int, ...]) -> int:
    if not reduced:
        return 2
    if len(reduced) == 1:
        return reduced[0]
    a, b = reduced
    return comb(a + b - 2, a - 1)


def _multinomial_bound(orders: Tuple[int, ...]) -> int:
    result = math.factorial(sum(order - 1 for order in orders))
    for order in orders:
        result //= math.factorial(order - 1)
    return result


def _ramsey_table(orders: Tuple[int, ...]) -> int:
    table: Dict[Tuple[int, ...], int] = {}
    for point in itertools.product(*(range(2, order + 1) for order in orders)):
        active = [index for index, value in enumerate(point) if value != 2]
        if len(active) <= 2:
            table[point] = _ramsey_small(tuple(sorted(point[index] for index in active)))
            continue
        total = 2 - len(active)
        for index in active:
            smaller = list(point)
            smaller[index] -= 1
            total += table[tuple(smaller)]
        table[point] = total
    return table[orders]
