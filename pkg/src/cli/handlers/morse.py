"""
Handlers da busca de orientações e do certificado de incoerência.
"""
import logging

from src.cli.config.settings import PipelineConfig
from src.cli.handlers.common import (
    EXIT_HYPOTHESIS,
    EXIT_OK,
    CommandResult,
    ServiceRegistry,
    compressed_complex,
    json_result,
    load_complex,
)
from src.models.morse import PARTIAL

logger = logging.getLogger(__name__)


def cmd_orient(config: PipelineConfig, services: ServiceRegistry) -> CommandResult:
    """
    Busca aleatória de uma orientação com todos os links ascendentes e descendentes bons.
    """
    seed = config.require_seed()
    k = load_complex(config, services)
    report = services.walls.pathology_report(k)
    search = services.morse.random_orientation_search(k, report, seed, config.max_attempts)
    payload = services.export.search_to_dict(search)
    if search.found:
        ds = services.morse.induce_directions(k, report.walls, search.orientation)
        payload["positive_closed_path"] = services.morse.has_positive_closed_path(ds)
        payload["lawful_cells"] = services.morse.lawful_cells(k, ds)
    return json_result(services, payload, EXIT_OK if search.found else EXIT_HYPOTHESIS)


def cmd_certify(config: PipelineConfig, services: ServiceRegistry) -> CommandResult:
    """
    Cadeia completa: recobrimento, compressão, paredes, orientação e certificado.
    """
    seed = config.require_seed()
    p, q, k = compressed_complex(config, services)
    report = services.walls.pathology_report(k)
    search = services.morse.random_orientation_search(k, report, seed, config.max_attempts)
    certificate = services.morse.incoherence_certificate(p, q, k, report, search)
    logger.info(f"Certificado com estado '{certificate.status}'")
    exit_code = EXIT_HYPOTHESIS if certificate.status == PARTIAL else EXIT_OK
    return json_result(services, services.export.certificate_to_dict(certificate), exit_code)
