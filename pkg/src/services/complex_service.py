"""
Serviço para construção de 2-complexos: complexo de apresentação, recobrimentos
regulares induzidos por quocientes finitos e compressão.
"""
import logging
from typing import Dict, List, Tuple

from sympy.combinatorics import Permutation, PermutationGroup

from src.models.complex import (
    HEAD,
    TAIL,
    LinkEdge,
    LinkGraph,
    LinkVertex,
    OneCell,
    PermutationQuotient,
    TorsionCheck,
    TwoCell,
    TwoComplex,
)
from src.models.coxeter import CoxeterPresentation
from src.models.errors import (
    CompressionError,
    NotAHomomorphismError,
    SizeCapExceeded,
    TorsionCheckError,
)

logger = logging.getLogger(__name__)

DEFAULT_SIZE_CAP = 10 ** 6


class ComplexService:
    """
    Serviço para 2-complexos associados a apresentações de Coxeter.
    """
    def __init__(self, size_cap: int = DEFAULT_SIZE_CAP):
        """
        Inicializa o serviço.

        Args:
            size_cap: Ordem máxima de grupo que um recobrimento pode materializar
        """
        self.size_cap = size_cap

    def presentation_complex(self, p: CoxeterPresentation) -> TwoComplex:
        """
        Complexo padrão X: um vértice, um laço por gerador, uma 2-célula por relator.
        """
        one_cells = tuple(OneCell(id=i - 1, tail=0, head=0, label=i) for i in p.generators)
        two_cells: List[TwoCell] = []
        for i in p.generators:
            two_cells.append(TwoCell(
                id=len(two_cells),
                boundary=((i - 1, 1), (i - 1, 1)),
                tag=("square", i),
            ))
        for i, j, m in p.finite_pairs():
            two_cells.append(TwoCell(
                id=len(two_cells),
                boundary=((i - 1, 1), (j - 1, 1)) * m,
                tag=("pair", i, j),
            ))
        return TwoComplex(zero_cells=1, one_cells=one_cells, two_cells=tuple(two_cells))

    def star_quotient(self, r: int) -> PermutationQuotient:
        """
        Estrela de transposições a_i -> (1, i+1) em r+1 pontos, válida para G_(r,3).
        """
        if r < 1:
            raise ValueError(f"Posto deve ser >= 1, recebido {r}")
        images = [Permutation(0, i, size=r + 1) for i in range(1, r + 1)]
        return PermutationQuotient(degree=r + 1, generator_images=tuple(images))

    def check_torsion_free_kernel(self, p: CoxeterPresentation, q: PermutationQuotient) -> TorsionCheck:
        """
        Verifica se ψ é injetor em todo parabólico finito <a_i> e <a_i, a_j>.

        Args:
            p: Apresentação de Coxeter
            q: Quociente candidato

        Returns:
            TorsionCheck com o veredito e o primeiro par violado
        """
        if len(q.generator_images) != p.rank:
            raise ValueError(
                f"Quociente com {len(q.generator_images)} imagens para posto {p.rank}"
            )
        for i in p.generators:
            if q.image(i).order() not in (1, 2):
                raise NotAHomomorphismError(f"Não é um homomorfismo: ψ(a_{i})^2 != 1")
        for i, j, m in p.finite_pairs():
            if m % (q.image(i) * q.image(j)).order() != 0:
                raise NotAHomomorphismError(f"Não é um homomorfismo: (ψ(a_{i})ψ(a_{j}))^{m} != 1")

        for i in p.generators:
            if q.image(i).order() != 2:
                return TorsionCheck(False, f"gerador a_{i} tem imagem de ordem 1")
        for i, j, m in p.finite_pairs():
            order = (q.image(i) * q.image(j)).order()
            if order != m:
                return TorsionCheck(False, f"par ({i}, {j}): produto de ordem {order}, esperado {m}")
        return TorsionCheck(True, "")

    def regular_cover(self, p: CoxeterPresentation, q: PermutationQuotient) -> TwoComplex:
        """
        Recobrimento X̂ correspondente a ker ψ, via ação regular do grupo imagem.

        Os vértices são os elementos do grupo gerado; a aresta (g, i) liga g a g·ψ(a_i).

        Args:
            p: Apresentação de Coxeter
            q: Quociente finito com núcleo livre de torção

        Returns:
            O recobrimento, com 2-células marcadas pelo relator de origem
        """
        check = self.check_torsion_free_kernel(p, q)
        if not check.torsion_free:
            logger.error(f"Recobrimento abortado: {check.diagnostic}")
            raise TorsionCheckError(check.diagnostic)

        group = PermutationGroup(list(q.generator_images))
        order = group.order()
        if order > self.size_cap:
            raise SizeCapExceeded(f"Grupo de ordem {order} acima do limite {self.size_cap}")
        logger.info(f"Construindo recobrimento regular de grau {order}")

        elements = sorted(group.generate(), key=lambda g: g.array_form)
        index = {tuple(g.array_form): n for n, g in enumerate(elements)}
        r = p.rank
        succ = [
            [index[tuple((g * q.image(i)).array_form)] for i in p.generators]
            for g in elements
        ]

        def edge_id(vertex: int, generator: int) -> int:
            return vertex * r + generator - 1

        one_cells = tuple(
            OneCell(id=edge_id(g, i), tail=g, head=succ[g][i - 1], label=i)
            for g in range(order) for i in p.generators
        )
        two_cells: List[TwoCell] = []
        for i in p.generators:
            for g in range(order):
                two_cells.append(TwoCell(
                    id=len(two_cells),
                    boundary=((edge_id(g, i), 1), (edge_id(succ[g][i - 1], i), 1)),
                    tag=("square", i, g),
                ))
        for i, j, m in p.finite_pairs():
            for g in range(order):
                boundary = []
                vertex = g
                for step in range(2 * m):
                    generator = i if step % 2 == 0 else j
                    boundary.append((edge_id(vertex, generator), 1))
                    vertex = succ[vertex][generator - 1]
                two_cells.append(TwoCell(id=len(two_cells), boundary=tuple(boundary), tag=("pair", i, j, g)))

        return TwoComplex(zero_cells=order, one_cells=one_cells, two_cells=tuple(two_cells))

    def compress(self, cover: TwoComplex, p: CoxeterPresentation) -> TwoComplex:
        """
        Compressão X̄: colapsa os dígonos de a_i^2 e identifica os 2m_ij polígonos
        de mesmo bordo.

        Args:
            cover: Recobrimento produzido por regular_cover
            p: Apresentação correspondente

        Returns:
            O complexo comprimido, com d 0-células, dr/2 1-células e d/(2m_ij) 2-células por par
        """
        edge_map: Dict[int, Tuple[int, int]] = {}
        keys: Dict[Tuple[int, int, int], int] = {}
        one_cells: List[OneCell] = []
        for edge in cover.one_cells:
            if edge.is_loop:
                raise CompressionError(f"1-célula {edge.id} é um laço no recobrimento")
            low, high = sorted((edge.tail, edge.head))
            key = (edge.label, low, high)
            if key not in keys:
                keys[key] = len(one_cells)
                one_cells.append(OneCell(id=len(one_cells), tail=low, head=high, label=edge.label))
            edge_map[edge.id] = (keys[key], 1 if edge.tail == low else -1)

        groups: Dict[tuple, List[TwoCell]] = {}
        for cell in cover.two_cells:
            if cell.tag is None:
                raise CompressionError(f"2-célula {cell.id} sem marca de relator")
            if cell.tag[0] == "square":
                collapsed = {edge_map[one_cell][0] for one_cell, _ in cell.boundary}
                if len(collapsed) != 1:
                    raise CompressionError(f"Dígono {cell.id} não colapsa numa única aresta")
                continue
            mapped = frozenset(edge_map[one_cell][0] for one_cell, _ in cell.boundary)
            groups.setdefault((cell.tag[1], cell.tag[2], mapped), []).append(cell)

        two_cells: List[TwoCell] = []
        for (i, j, _), lifts in groups.items():
            m = p.exponent(i, j)
            if len(lifts) != 2 * m:
                raise CompressionError(
                    f"Órbita de {len(lifts)} polígonos para o par ({i}, {j}), esperado {2 * m}"
                )
            representative = lifts[0]
            boundary = tuple(
                (edge_map[one_cell][0], edge_map[one_cell][1] * direction)
                for one_cell, direction in representative.boundary
            )
            two_cells.append(TwoCell(id=len(two_cells), boundary=boundary, tag=("pair", i, j)))

        compressed = TwoComplex(
            zero_cells=cover.zero_cells,
            one_cells=tuple(one_cells),
            two_cells=tuple(two_cells),
        )
        zero, one, two = compressed.cell_counts()
        logger.info(f"Compressão concluída: {zero} 0-células, {one} 1-células, {two} 2-células")
        return compressed

    def compressed_cover_mismatches(
        self, k: TwoComplex, p: CoxeterPresentation, q: PermutationQuotient
    ) -> List[str]:
        """
        Diferenças entre k e a compressão do recobrimento de (p, q).

        Confere o grau contra a ordem do grupo imagem, uma 1-célula de cada rótulo
        em cada 0-célula e d/(2m_ij) polígonos de bordo 2m_ij por par finito.

        Returns:
            Lista vazia quando k tem a forma esperada
        """
        degree = int(PermutationGroup(list(q.generator_images)).order())
        problems = []
        if k.zero_cells != degree:
            problems.append(f"{k.zero_cells} 0-células, grupo imagem de ordem {degree}")

        generators = list(p.generators)
        unlabeled = [edge.id for edge in k.one_cells if edge.label not in p.generators]
        if unlabeled:
            problems.append(f"1-células sem rótulo de gerador: {unlabeled[:5]}")
        else:
            for x in range(k.zero_cells):
                labels = sorted(k.one_cells[one_cell].label for one_cell, _ in k.incidence_index.get(x, []))
                if labels != generators:
                    problems.append(f"0-célula {x} com rótulos incidentes {labels}, esperado {generators}")
                    break

        expected = {(i, j): (degree // (2 * m), 2 * m) for i, j, m in p.finite_pairs()}
        found: Dict[Tuple[int, int], int] = {}
        for cell in k.two_cells:
            if not cell.tag or cell.tag[0] != "pair" or (cell.tag[1], cell.tag[2]) not in expected:
                problems.append(f"2-célula {cell.id} sem par finito correspondente: {cell.tag}")
                break
            pair = (cell.tag[1], cell.tag[2])
            if len(cell.boundary) != expected[pair][1]:
                problems.append(f"2-célula {cell.id} com bordo {len(cell.boundary)}, esperado {expected[pair][1]}")
                break
            found[pair] = found.get(pair, 0) + 1
        for pair, (count, _) in expected.items():
            if found.get(pair, 0) != count:
                problems.append(f"par {pair}: {found.get(pair, 0)} 2-células, esperado {count}")
        return problems

    def link(self, k: TwoComplex, x: int) -> LinkGraph:
        """
        Grafo de link de x: um vértice por extremidade de 1-célula em x,
        uma aresta por canto de 2-célula em x.
        """
        if not 0 <= x < k.zero_cells:
            raise ValueError(f"0-célula inexistente: {x}")
        vertices = [LinkVertex(one_cell, end) for one_cell, end in k.incidence_index.get(x, [])]
        edges = []
        for cell_id, position in k.corner_index.get(x, []):
            cell = k.two_cells[cell_id]
            previous_cell, previous_direction = cell.boundary[position - 1]
            current_cell, current_direction = cell.boundary[position]
            u = LinkVertex(previous_cell, HEAD if previous_direction > 0 else TAIL)
            v = LinkVertex(current_cell, TAIL if current_direction > 0 else HEAD)
            edges.append(LinkEdge(two_cell=cell_id, position=position, u=u, v=v))
        return LinkGraph(x=x, vertices=vertices, edges=edges)
