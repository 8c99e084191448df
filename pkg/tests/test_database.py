import asyncio
from unittest.mock import AsyncMock, MagicMock

import pytest

from src.models import database
from src.models.database import ReportArchive


@pytest.fixture
def fake_client(monkeypatch):
    client = MagicMock()
    db = MagicMock()
    db.runs.create_indexes = AsyncMock()
    db.runs.insert_one = AsyncMock(return_value=MagicMock(inserted_id="65f0c0ffee"))
    client.__getitem__.return_value = db
    monkeypatch.setattr(database.motor.motor_asyncio, "AsyncIOMotorClient", MagicMock(return_value=client))
    return client, db


def test_connect_creates_indexes(fake_client):
    client, db = fake_client
    archive = ReportArchive()
    asyncio.run(archive.connect("mongodb://localhost:27017", "coxeter_runs"))
    client.__getitem__.assert_called_once_with("coxeter_runs")
    indexes = db.runs.create_indexes.await_args.args[0]
    assert [index.document["key"] for index in indexes] == [
        {"command": 1}, {"seed": 1}, {"created_at": -1},
    ]


def test_save_report_inserts_document(fake_client):
    _, db = fake_client
    archive = ReportArchive()

    async def scenario():
        await archive.connect("mongodb://localhost:27017", "coxeter_runs")
        inserted = await archive.save_report("chi", {"chi": "1/6"}, seed=None)
        await archive.close()
        return inserted

    assert asyncio.run(scenario()) == "65f0c0ffee"
    document = db.runs.insert_one.await_args.args[0]
    assert document["command"] == "chi"
    assert document["payload"] == {"chi": "1/6"}
    assert document["seed"] is None
    assert document["created_at"].tzinfo is not None


def test_save_report_propagates_errors(fake_client):
    _, db = fake_client
    db.runs.insert_one.side_effect = RuntimeError("sem conexão")
    archive = ReportArchive()

    async def scenario():
        await archive.connect("mongodb://localhost:27017", "coxeter_runs")
        await archive.save_report("ramsey", {"bound": 6}, seed=1)

    with pytest.raises(RuntimeError):
        asyncio.run(scenario())
