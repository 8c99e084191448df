#!/usr/bin/env python3
"""
src/cli/app.py
Linha de comando do toolkit de incoerência de grupos de Coxeter: carrega o .env,
instancia os serviços e despacha cada subcomando para o seu handler.
"""
import argparse
import asyncio
import logging
import sys
from dataclasses import replace
from typing import Callable, Dict, List, Optional, TextIO

from dotenv import load_dotenv

from src.cli.config.settings import PipelineConfig, Settings
from src.cli.handlers.common import (
    EXIT_HYPOTHESIS,
    EXIT_INPUT,
    CommandResult,
    ServiceRegistry,
)
from src.cli.handlers.complex import cmd_compress, cmd_cover
from src.cli.handlers.coxeter import cmd_chi, cmd_dimension
from src.cli.handlers.curvature import cmd_curvature
from src.cli.handlers.morse import cmd_certify, cmd_orient
from src.cli.handlers.partitions import cmd_partitions
from src.cli.handlers.probability import cmd_probe, cmd_ramsey, cmd_threshold
from src.cli.handlers.walls import cmd_walls
from src.models.database import ReportArchive
from src.models.errors import HypothesisFailure, TorsionCheckError
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

Handler = Callable[[PipelineConfig, ServiceRegistry], CommandResult]

HANDLERS: Dict[str, Handler] = {
    "chi": cmd_chi,
    "dimension": cmd_dimension,
    "cover": cmd_cover,
    "compress": cmd_compress,
    "walls": cmd_walls,
    "orient": cmd_orient,
    "partitions": cmd_partitions,
    "probe": cmd_probe,
    "threshold": cmd_threshold,
    "ramsey": cmd_ramsey,
    "curvature": cmd_curvature,
    "certify": cmd_certify,
}

# Destinos das opções comuns; o resto vira PipelineConfig.options
COMMON_KEYS = {
    "command", "presentation", "uniform", "catalog", "quotient", "star", "complex",
    "seed", "max_attempts", "trials", "size_cap", "greedy_pool", "output", "dot", "archive",
}


def build_services(settings: Settings, catalog_path: Optional[str] = None) -> ServiceRegistry:
    """
    Instancia os serviços uma única vez, compostos pelo construtor.
    """
    coxeter_svc = CoxeterService()
    complex_svc = ComplexService(size_cap=settings.size_cap)
    wall_svc = WallService(complex_svc)
    export_svc = ExportService()
    registry = ServiceRegistry(
        coxeter=coxeter_svc,
        complex=complex_svc,
        walls=wall_svc,
        morse=MorseService(complex_svc, wall_svc, coxeter_svc),
        partitions=PartitionService(coxeter_svc, complex_svc, settings.size_cap, settings.greedy_pool),
        probability=ProbabilityService(),
        curvature=CurvatureService(coxeter_svc, complex_svc),
        export=export_svc,
        catalog=QuotientCatalog(export_svc, catalog_path),
    )
    logger.debug("Serviços instanciados")
    return registry


def build_parser(settings: Settings) -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    source = common.add_argument_group("entradas")
    source.add_argument("--presentation", help="arquivo JSON da apresentação")
    source.add_argument("--uniform", nargs=2, type=int, metavar=("R", "M"), help="apresentação uniforme G_(r,m)")
    source.add_argument("--catalog", help="nome de um quociente embutido (config/quotients.json)")
    source.add_argument("--quotient", help="arquivo JSON do quociente")
    source.add_argument("--star", action="store_true", help="usa a estrela de transposições como quociente")
    source.add_argument("--complex", help="arquivo JSON de um 2-complexo")
    run = common.add_argument_group("execução")
    run.add_argument("--seed", type=int, help="semente (obrigatória nos subcomandos aleatórios)")
    run.add_argument("--max-attempts", type=int, default=settings.max_attempts)
    run.add_argument("--trials", type=int, default=settings.trials)
    run.add_argument("--size-cap", type=int, default=settings.size_cap)
    run.add_argument("--greedy-pool", type=int, default=settings.greedy_pool)
    run.add_argument("--output", help="escreve o artefato neste arquivo em vez de stdout")
    run.add_argument("--dot", help="escreve o grafo DOT neste arquivo")
    run.add_argument("--archive", action="store_true", help="arquiva o artefato no MongoDB")

    parser = argparse.ArgumentParser(
        prog="coxeter",
        description="Ferramentas para incoerência de grupos de Coxeter.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in ("chi", "dimension", "cover", "compress", "walls", "orient", "certify"):
        sub.add_parser(name, parents=[common])

    partitions = sub.add_parser("partitions", parents=[common])
    partitions.add_argument("--r", type=int)
    partitions.add_argument("--k", type=int)
    partitions.add_argument("--method", choices=("random", "greedy"), default="random")
    partitions.add_argument("--verify", help="arquivo JSON de uma família a verificar")
    partitions.add_argument("--product", action="store_true", help="monta o homomorfismo produto β")
    partitions.add_argument("--m", type=int, default=3)

    probe = sub.add_parser("probe", parents=[common])
    probe.add_argument("--r", type=int, nargs="+", required=True)
    probe.add_argument("--m", type=int, required=True)

    threshold = sub.add_parser("threshold", parents=[common])
    exponent = threshold.add_mutually_exclusive_group(required=True)
    exponent.add_argument("--m", type=int)
    exponent.add_argument("--up-to", type=int, metavar="M", help="expoentes de 3 a M, via Ramsey")
    threshold.add_argument("--qsize", type=int, required=True)

    ramsey = sub.add_parser("ramsey", parents=[common])
    ramsey.add_argument("orders", type=int, nargs="+")

    curvature = sub.add_parser("curvature", parents=[common])
    curvature.add_argument("--preset", choices=("regular-euclidean",), default="regular-euclidean")
    curvature.add_argument("--brute-force", type=int, metavar="X", help="busca exaustiva de seções no vértice X")
    return parser


def build_config(args: argparse.Namespace) -> PipelineConfig:
    values = vars(args)
    return PipelineConfig(
        command=args.command,
        presentation_path=args.presentation,
        uniform=tuple(args.uniform) if args.uniform else None,
        catalog=args.catalog,
        quotient_path=args.quotient,
        star=args.star,
        complex_path=args.complex,
        seed=args.seed,
        max_attempts=args.max_attempts,
        trials=args.trials,
        size_cap=args.size_cap,
        greedy_pool=args.greedy_pool,
        output=args.output,
        dot_output=args.dot,
        archive=args.archive,
        options={key: value for key, value in values.items() if key not in COMMON_KEYS},
    )


def emit(config: PipelineConfig, result: CommandResult, stdout: TextIO) -> None:
    if config.output:
        with open(config.output, "w", encoding="utf-8") as f:
            f.write(result.text)
    else:
        stdout.write(result.text)
    if config.dot_output and result.dot is not None:
        with open(config.dot_output, "w", encoding="utf-8") as f:
            f.write(result.dot)


async def archive_result(
    settings: Settings,
    config: PipelineConfig,
    payload,
    archive: Optional[ReportArchive] = None,
) -> str:
    archive = archive or ReportArchive()
    await archive.connect(settings.mongodb_uri, settings.mongodb_database)
    try:
        return await archive.save_report(config.command, payload, config.seed)
    finally:
        await archive.close()


def main(argv: Optional[List[str]] = None, stdout: Optional[TextIO] = None) -> int:
    load_dotenv()
    stdout = stdout or sys.stdout
    try:
        settings = Settings.from_env()
    except ValueError as e:
        print(f"Erro de configuração: {e}", file=sys.stderr)
        return EXIT_INPUT

    logging.basicConfig(
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        level=getattr(logging, settings.log_level, logging.INFO),
        stream=sys.stderr,
    )

    args = build_parser(settings).parse_args(argv)
    config = build_config(args)
    services = build_services(replace(settings, size_cap=config.size_cap, greedy_pool=config.greedy_pool))

    try:
        result = HANDLERS[config.command](config, services)
        emit(config, result, stdout)
    except (HypothesisFailure, TorsionCheckError) as e:
        logger.error(f"Hipótese não satisfeita em '{config.command}': {e}")
        print(f"Hipótese não satisfeita: {e}", file=sys.stderr)
        return EXIT_HYPOTHESIS
    except (ValueError, OSError) as e:
        logger.error(f"Entrada inválida em '{config.command}': {e}")
        print(f"Erro de entrada: {e}", file=sys.stderr)
        return EXIT_INPUT

    if config.archive:
        if not settings.mongodb_uri:
            logger.warning("MONGODB_URI não definido; arquivamento ignorado")
        else:
            try:
                asyncio.run(archive_result(settings, config, services.export.plain(result.payload)))
            except Exception as e:
                logger.error(f"Falha ao arquivar a execução: {e}")

    return result.exit_code


if __name__ == "__main__":
    sys.exit(main())
