"""
Handler das famílias de partições e do homomorfismo produto.
"""
from src.cli.config.settings import PipelineConfig
from src.cli.handlers.common import (
    EXIT_HYPOTHESIS,
    EXIT_OK,
    CommandResult,
    ServiceRegistry,
    json_result,
    load_quotient,
)


def cmd_partitions(config: PipelineConfig, services: ServiceRegistry) -> CommandResult:
    """
    Gera (random/greedy) ou verifica (--verify) uma família separadora; com --product
    monta β a partir de um quociente de G_(4,m).
    """
    options = config.options
    svc = services.partitions

    if options.get("verify"):
        family = services.export.family_from_dict(services.export.load_json(options["verify"]))
        unseparated = svc.verify_family(family)
        payload = {"r": family.r, "size": len(family), "unseparated": [list(q) for q in unseparated]}
        return json_result(services, payload, EXIT_OK if not unseparated else EXIT_HYPOTHESIS)

    r = options.get("r")
    if r is None:
        raise ValueError("Informe --r (ou --verify com um arquivo de família)")
    if options.get("method", "random") == "greedy":
        family = svc.greedy_family(r, seed=config.seed or 0)
        payload = {"method": "greedy", "size": len(family), "k_required": svc.k_required(r),
                   "family": services.export.family_to_dict(family)}
    else:
        k = options.get("k") or svc.k_required(r)
        result = svc.random_family(r, k, config.require_seed(), config.max_attempts)
        if not result.found:
            return json_result(services, services.export.family_result_to_dict(result), EXIT_HYPOTHESIS)
        family = result.family
        payload = {"method": "random", "size": len(family), "k_required": svc.k_required(r),
                   **services.export.family_result_to_dict(result)}

    if options.get("product"):
        m = options["m"]
        p4 = services.coxeter.uniform(4, m)
        q4 = load_quotient(config, services, p4)
        product = svc.product_homomorphism(r, m, family, q4)
        payload["product"] = services.export.product_to_dict(product)
    return json_result(services, payload)
