"""
Arquivo opcional de execuções em MongoDB.
"""
from datetime import datetime, timezone
import logging
from typing import Any, Dict, Optional

import motor.motor_asyncio
from pymongo import IndexModel, ASCENDING, DESCENDING

logger = logging.getLogger(__name__)


class ReportArchive:
    """
    Classe para guardar artefatos JSON das execuções na coleção `runs`.
    """
    def __init__(self):
        self.client = None
        self.db = None

    async def connect(self, uri: str, db_name: str):
        """
        Estabelece a conexão com o MongoDB e configura os índices.

        Args:
            uri: URI de conexão com o MongoDB
            db_name: Nome do banco de dados
        """
        try:
            logger.info("Conectando ao MongoDB para arquivar a execução")
            self.client = motor.motor_asyncio.AsyncIOMotorClient(uri)
            self.db = self.client[db_name]
            await self._setup_indexes()
            logger.info("Conexão com MongoDB estabelecida com sucesso")
        except Exception as e:
            logger.error(f"Erro ao conectar ao MongoDB: {e}")
            raise

    async def _setup_indexes(self):
        run_indexes = [
            IndexModel([("command", ASCENDING)]),
            IndexModel([("seed", ASCENDING)]),
            IndexModel([("created_at", DESCENDING)]),
        ]
        await self.db.runs.create_indexes(run_indexes)
        logger.info("Índices configurados com sucesso")

    async def save_report(self, command: str, payload: Dict[str, Any], seed: Optional[int] = None) -> str:
        """
        Guarda um artefato.

        Args:
            command: Subcomando que produziu o artefato
            payload: Artefato já convertido para tipos JSON
            seed: Semente usada, se houver

        Returns:
            ID do documento inserido
        """
        document = {
            "command": command,
            "seed": seed,
            "payload": payload,
            "created_at": datetime.now(timezone.utc),
        }
        try:
            result = await self.db.runs.insert_one(document)
            logger.info(f"Execução de '{command}' arquivada")
            return str(result.inserted_id)
        except Exception as e:
            logger.error(f"Erro ao arquivar execução de '{command}': {e}")
            raise

    async def close(self):
        if self.client:
            self.client.close()
            logger.info("Conexão com MongoDB fechada")
