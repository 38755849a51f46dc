import pytest
from pydantic import ValidationError

from schemas.command import CommandConfig
from services.command_manager import CommandManager
from thom.polynomial import verify_table1
from worker import WorkerManager


def test_available_commands_match_the_cli():
    manager = CommandManager()
    assert set(manager.get_available_commands()) == {
        "tp", "verify-table1", "scan", "tp3", "ggl", "mdeg", "oracle", "residue"
    }


def test_unsupported_command():
    result = CommandManager().execute_command(CommandConfig(command="nope"))
    assert result.exit_code == 2
    assert "Unsupported command" in result.error


def test_missing_option_is_reported():
    result = CommandManager().execute_command(CommandConfig(command="tp"))
    assert result.exit_code == 2
    assert result.error == "Missing required option: --k"


def test_computation_result_payload():
    result = CommandManager().execute_command(CommandConfig(command="tp", k=2, codim=1))
    assert result.exit_code == 0
    assert result.payload["polynomial"] == result.text


def test_config_normalizes_delta():
    assert CommandConfig(command="ggl", n=2, delta="2/48").delta == "1/24"
    with pytest.raises(ValidationError):
        CommandConfig(command="scan", k=2, radius=-1)


def test_worker_count_does_not_change_results():
    serial = verify_table1(3, workers=WorkerManager(1))
    pooled = verify_table1(3, workers=WorkerManager(2))
    assert serial == pooled


def test_worker_map_keeps_input_order():
    assert WorkerManager(1).map(abs, [-3, 2, -1]) == [3, 2, 1]


def test_registered_service_is_dispatched():
    manager = CommandManager()
    manager.register_service("tp-alias", manager.get_service("tp"))
    result = manager.execute_command(CommandConfig(command="tp-alias", k=1))
    assert result.exit_code == 0 and result.text == "c_1"
