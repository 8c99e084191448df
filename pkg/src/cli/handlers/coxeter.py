"""
Handlers de apresentações: χ e dimensão.
"""
from src.cli.config.settings import PipelineConfig
from src.cli.handlers.common import CommandResult, ServiceRegistry, json_result, load_presentation


def cmd_chi(config: PipelineConfig, services: ServiceRegistry) -> CommandResult:
    """Imprime χ(G) como fração exata."""
    p = load_presentation(config, services)
    chi = services.coxeter.euler_characteristic(p)
    return CommandResult(exit_code=0, text=f"{chi}\n", payload={"chi": str(chi)})


def cmd_dimension(config: PipelineConfig, services: ServiceRegistry) -> CommandResult:
    p = load_presentation(config, services)
    witness = services.coxeter.dimension_witness(p)
    payload = {
        "rank": p.rank,
        "dimension_at_most_2": witness is None,
        "witness": list(witness) if witness else None,
        "chi": services.coxeter.euler_characteristic(p),
    }
    return json_result(services, payload)
