import json
import logging
import os
from typing import List, Optional, Tuple

from src.models.complex import PermutationQuotient
from src.models.coxeter import CoxeterPresentation
from src.services.export_service import ExportService

PROJECT_ROOT = os.path.dirname(os.path.dirname(os.path.dirname(os.path.abspath(__file__))))


class QuotientCatalog:
    """
    Catálogo de quocientes embutidos (apresentação + quociente por permutações).
    Lê o arquivo config/quotients.json.
    """

    def __init__(self, export_svc: ExportService, config_path: Optional[str] = None):
        self.export_svc = export_svc
        self.logger = logging.getLogger(__name__)

        cfg = config_path or os.path.join(PROJECT_ROOT, "config", "quotients.json")
        try:
            with open(cfg, "r", encoding="utf-8") as f:
                self.entries = json.load(f)
        except Exception as e:
            self.logger.error(f"Não foi possível carregar {cfg}: {e}")
            self.entries = {}

    def names(self) -> List[str]:
        return sorted(self.entries)

    def get(self, name: str) -> Tuple[CoxeterPresentation, PermutationQuotient]:
        if name not in self.entries:
            raise ValueError(f"Quociente desconhecido: {name} (disponíveis: {', '.join(self.names())})")
        entry = self.entries[name]
        return (
            self.export_svc.presentation_from_dict(entry["presentation"]),
            self.export_svc.quotient_from_dict(entry["quotient"]),
        )

