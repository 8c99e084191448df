"""
Handler do relatório de curvatura.
"""
from src.cli.config.settings import PipelineConfig
from src.cli.handlers.common import CommandResult, ServiceRegistry, compressed_complex, json_result


def cmd_curvature(config: PipelineConfig, services: ServiceRegistry) -> CommandResult:
    """
    Métrica euclidiana regular no complexo comprimido; opcionalmente a busca
    exaustiva de seções num vértice.
    """
    if config.options.get("preset", "regular-euclidean") != "regular-euclidean":
        raise ValueError(f"Preset desconhecido: {config.options['preset']}")
    p, _, k = compressed_complex(config, services)
    ac = services.curvature.regular_euclidean_angles(k)
    report = services.curvature.curvature_report(p, ac)
    payload = services.export.curvature_to_dict(report)
    payload["chi"] = services.coxeter.euler_characteristic(p)
    vertex = config.options.get("brute_force")
    if vertex is not None:
        brute = services.curvature.brute_force_sectional_at(ac, vertex)
        payload["brute_force"] = {
            "x": brute.x,
            "sections_checked": brute.sections_checked,
            "max_curvature": brute.max_curvature,
        }
    return json_result(services, payload)
