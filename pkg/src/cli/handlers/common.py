"""
Registro de serviços, resultado de comando e leitura das entradas comuns.
"""
import logging
from dataclasses import dataclass
from typing import Any, Optional, Tuple

from src.cli.config.settings import PipelineConfig
from src.models.complex import PermutationQuotient, TwoComplex
from src.models.coxeter import CoxeterPresentation
from src.services.complex_service import ComplexService
from src.services.coxeter_service import CoxeterService
from src.services.curvature_service import CurvatureService
from src.services.export_service import ExportService
from src.services.morse_service import MorseService
from src.services.partition_service import PartitionService
from src.services.probability_service import ProbabilityService
from src.services.quotient_catalog import QuotientCatalog
from src.services.wall_service import WallService

logger = logging.getLogger(__name__)

# Códigos de saída
EXIT_OK = 0
EXIT_HYPOTHESIS = 1
EXIT_INPUT = 2


@dataclass
class ServiceRegistry:
    coxeter: CoxeterService
    complex: ComplexService
    walls: WallService
    morse: MorseService
    partitions: PartitionService
    probability: ProbabilityService
    curvature: CurvatureService
    export: ExportService
    catalog: QuotientCatalog


@dataclass
class CommandResult:
    exit_code: int
    # artefato principal, escrito em stdout ou em --output
    text: str
    # versão JSON do artefato para o arquivo MongoDB
    payload: Any = None
    dot: Optional[str] = None


def json_result(services: ServiceRegistry, payload: Any, exit_code: int = EXIT_OK,
                dot: Optional[str] = None) -> CommandResult:
    text = services.export.dumps(payload) + "\n"
    return CommandResult(exit_code=exit_code, text=text, payload=payload, dot=dot)


def load_presentation(config: PipelineConfig, services: ServiceRegistry) -> CoxeterPresentation:
    """
    Apresentação vinda de --presentation, --uniform ou --catalog (exatamente uma).
    """
    sources = [config.presentation_path, config.uniform, config.catalog]
    if sum(source is not None for source in sources) != 1:
        raise ValueError("Informe exatamente uma fonte de apresentação: --presentation, --uniform ou --catalog")
    if config.presentation_path:
        return services.export.presentation_from_dict(services.export.load_json(config.presentation_path))
    if config.uniform:
        r, m = config.uniform
        return services.coxeter.uniform(r, m)
    return services.catalog.get(config.catalog)[0]


def load_quotient(config: PipelineConfig, services: ServiceRegistry, p: CoxeterPresentation) -> PermutationQuotient:
    if config.quotient_path:
        return services.export.quotient_from_dict(services.export.load_json(config.quotient_path))
    if config.star:
        return services.complex.star_quotient(p.rank)
    if config.catalog:
        return services.catalog.get(config.catalog)[1]
    raise ValueError("Informe o quociente: --quotient, --star ou --catalog")


def compressed_complex(
    config: PipelineConfig, services: ServiceRegistry
) -> Tuple[CoxeterPresentation, PermutationQuotient, TwoComplex]:
    p = load_presentation(config, services)
    q = load_quotient(config, services, p)
    cover = services.complex.regular_cover(p, q)
    return p, q, services.complex.compress(cover, p)


def load_complex(config: PipelineConfig, services: ServiceRegistry) -> TwoComplex:
    """Complexo de --complex, ou o comprimido da apresentação e do quociente."""
    if config.complex_path:
        return services.export.complex_from_dict(services.export.load_json(config.complex_path))
    return compressed_complex(config, services)[2]
