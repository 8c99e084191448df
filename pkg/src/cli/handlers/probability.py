"""
Handlers probabilísticos: amostragem do link, posto limiar e Ramsey.
"""
import io
from decimal import Decimal

from src.cli.config.settings import PipelineConfig
from src.cli.handlers.common import CommandResult, ServiceRegistry, json_result


def cmd_probe(config: PipelineConfig, services: ServiceRegistry) -> CommandResult:
    """Tabela CSV de Monte Carlo, uma linha por r."""
    seed = config.require_seed()
    rows = services.probability.sweep(config.options["r"], config.options["m"], config.trials, seed)
    buffer = io.StringIO()
    services.export.write_csv(rows, buffer)
    return CommandResult(exit_code=0, text=buffer.getvalue(), payload=rows)


def cmd_threshold(config: PipelineConfig, services: ServiceRegistry) -> CommandResult:
    q_size = config.options["qsize"]
    if config.options.get("up_to") is not None:
        result = services.probability.nonuniform_threshold(config.options["up_to"], q_size)
        return json_result(services, result.to_dict())
    m = config.options["m"]
    r = services.probability.threshold_rank(m, q_size)
    payload = {
        "m": m,
        "q_size": q_size,
        "threshold_rank": r,
        "margin_at_rank": str(services.probability.threshold_margin(r, m, q_size)),
        "margin_below": str(services.probability.threshold_margin(r - 1, m, q_size)),
    }
    return json_result(services, payload)


def cmd_ramsey(config: PipelineConfig, services: ServiceRegistry) -> CommandResult:
    orders = config.options["orders"]
    bound = services.probability.ramsey_upper_bound(orders)
    return CommandResult(exit_code=0, text=f"{Decimal(bound)}\n", payload={"orders": orders, "bound": bound})
