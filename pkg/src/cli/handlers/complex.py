"""
Handlers de recobrimento e compressão.
"""
from src.cli.config.settings import PipelineConfig
from src.cli.handlers.common import (
    CommandResult,
    ServiceRegistry,
    json_result,
    load_presentation,
    load_quotient,
)


def cmd_cover(config: PipelineConfig, services: ServiceRegistry) -> CommandResult:
    """
    Recobrimento regular X̂ do quociente informado.
    """
    p = load_presentation(config, services)
    q = load_quotient(config, services, p)
    cover = services.complex.regular_cover(p, q)
    payload = {
        "cell_counts": list(cover.cell_counts()),
        "euler_characteristic": cover.euler_characteristic(),
        "complex": services.export.complex_to_dict(cover),
    }
    dot = services.export.to_dot(cover) if config.dot_output else None
    return json_result(services, payload, dot=dot)


def cmd_compress(config: PipelineConfig, services: ServiceRegistry) -> CommandResult:
    """
    Compressão X̄, com a conferência χ(X̄)/grau = χ(G).
    """
    p = load_presentation(config, services)
    q = load_quotient(config, services, p)
    compressed = services.complex.compress(services.complex.regular_cover(p, q), p)
    chi = services.coxeter.euler_characteristic(p)
    degree = compressed.zero_cells
    payload = {
        "degree": degree,
        "cell_counts": list(compressed.cell_counts()),
        "euler_characteristic": compressed.euler_characteristic(),
        "chi": chi,
        "chi_matches": compressed.euler_characteristic() == chi * degree,
        "complex": services.export.complex_to_dict(compressed),
    }
    dot = services.export.to_dot(compressed) if config.dot_output else None
    return json_result(services, payload, dot=dot)
