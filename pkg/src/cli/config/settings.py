"""
Configuração: variáveis de ambiente (.env) e a configuração imutável de uma execução.
"""
import os
from dataclasses import dataclass, field
from typing import Any, Dict, Optional, Tuple


@dataclass(frozen=True)
class Settings:
    log_level: str = "INFO"
    size_cap: int = 1_000_000
    max_attempts: int = 200
    trials: int = 100_000
    greedy_pool: int = 4096
    mongodb_uri: Optional[str] = None
    mongodb_database: str = "coxeter_runs"

    @classmethod
    def from_env(cls) -> "Settings":
        """
        Lê as variáveis COXETER_* e MONGODB_* do ambiente.
        """
        try:
            return cls(
                log_level=os.getenv("COXETER_LOG_LEVEL", "INFO").upper(),
                size_cap=int(os.getenv("COXETER_SIZE_CAP", "1000000")),
                max_attempts=int(os.getenv("COXETER_MAX_ATTEMPTS", "200")),
                trials=int(os.getenv("COXETER_TRIALS", "100000")),
                greedy_pool=int(os.getenv("COXETER_GREEDY_POOL", "4096")),
                mongodb_uri=os.getenv("MONGODB_URI") or None,
                mongodb_database=os.getenv("MONGODB_DATABASE", "coxeter_runs"),
            )
        except ValueError as e:
            raise ValueError(f"Variável de ambiente numérica inválida: {e}") from e


@dataclass(frozen=True)
class PipelineConfig:
    """
    Entradas de um subcomando, já mescladas com as Settings (flags têm prioridade).
    """
    command: str
    presentation_path: Optional[str] = None
    uniform: Optional[Tuple[int, int]] = None
    catalog: Optional[str] = None
    quotient_path: Optional[str] = None
    star: bool = False
    complex_path: Optional[str] = None
    seed: Optional[int] = None
    max_attempts: int = 200
    trials: int = 100_000
    size_cap: int = 1_000_000
    greedy_pool: int = 4096
    output: Optional[str] = None
    dot_output: Optional[str] = None
    archive: bool = False
    # parâmetros próprios do subcomando (r, m, k, ordens, ...)
    options: Dict[str, Any] = field(default_factory=dict)

    def require_seed(self) -> int:
        if self.seed is None:
            raise ValueError(f"O subcomando '{self.command}' é aleatório e exige --seed")
        return self.seed
