"""
Handler do relatório de paredes.
"""
from src.cli.config.settings import PipelineConfig
from src.cli.handlers.common import CommandResult, ServiceRegistry, json_result, load_complex


def cmd_walls(config: PipelineConfig, services: ServiceRegistry) -> CommandResult:
    k = load_complex(config, services)
    report = services.walls.pathology_report(k)
    dot = services.export.to_dot(k, report.walls) if config.dot_output else None
    return json_result(services, services.export.report_to_dict(report), dot=dot)
