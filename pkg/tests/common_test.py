# logger run ids, timers and settings
import logging

from common.logger import CustomLogger, RunIdFilter, get_run_id, run_id_var
from common.timer import timed, timer
from core.config import get_settings

def test_run_id_filter_tags_records():
    record = logging.LogRecord("xp", logging.INFO, __file__, 1, "msg", None, None)
    token = run_id_var.set("cli:test:abcd1234")
    try:
        RunIdFilter().filter(record)
        assert record.run_id == "cli:test:abcd1234"
        assert get_run_id() == "cli:test:abcd1234"
    finally:
        run_id_var.reset(token)
    RunIdFilter().filter(record)
    assert record.run_id == "N/A"

def test_logger_factory_reuses_loggers():
    assert CustomLogger.get_logger("xp") is CustomLogger.get_logger("xp")
    CustomLogger.set_level("DEBUG")
    assert CustomLogger.get_logger("xp").level == logging.DEBUG
    CustomLogger.set_level("INFO")

def test_timer_and_timed():
    with timer("block", log=False) as sw:
        sum(range(1000))
    assert sw.elapsed_ms >= 0.0
    assert sw.elapsed_s == sw.elapsed_ms / 1000.0

    @timed()
    def add(a, b):
        return a + b

    assert add(2, 3) == 5
    assert add.__name__ == "add"

def test_settings_from_environment(monkeypatch):
    monkeypatch.setenv("XP_REJECTION_CAP", "7")
    get_settings.cache_clear()
    assert get_settings().XP_REJECTION_CAP == 7
    assert get_settings().XP_DENSE_EIG_MAX_N == 4096
