# shared logger factory
# every record is tagged with a run id so interleaved experiments, CLI calls and
# HTTP requests can be told apart in one log stream

import logging
from contextvars import ContextVar
from typing import Dict

# Holds the correlation id of whatever is currently running: a request, a CLI command
# or an experiment grid point.
# NOTE: import run_id_var and set it before logging inside a new unit of work
run_id_var: ContextVar[str] = ContextVar("run_id", default="")

class RunIdFilter(logging.Filter):
    """
    A logging filter that injects the run id from the context variable
    into the log record.
    """
    def filter(self, record):
        record.run_id = run_id_var.get() or "N/A"
        return True

def get_run_id() -> str:
    """
    Retrieves the current run id from the context variable.
    """
    return run_id_var.get()

class CustomLogger:
    """A factory class for creating and configuring loggers."""
    _loggers: Dict[str, logging.Logger] = {}

    @classmethod
    def get_logger(cls, name: str = "xp", log_level: int | str = logging.INFO) -> logging.Logger:
        if name in cls._loggers:
            return cls._loggers[name]

        logger = logging.getLogger(name)
        logger.setLevel(log_level)
        logger.propagate = False

        if logger.handlers:
            logger.handlers.clear()

        logger.addFilter(RunIdFilter())

        log_format = logging.Formatter(
            '%(asctime)s - [%(run_id)s] - [%(filename)s:%(lineno)d] - %(name)s - %(levelname)s - %(message)s',
            '%Y-%m-%d %H:%M:%S'
        )

        console_handler = logging.StreamHandler()
        console_handler.setLevel(log_level)
        console_handler.setFormatter(log_format)

        logger.addHandler(console_handler)

        cls._loggers[name] = logger
        return logger

    @classmethod
    def set_level(cls, log_level: int | str) -> None:
        """Re-levels every logger made by this factory (CLI --log-level, settings)."""
        for logger in cls._loggers.values():
            logger.setLevel(log_level)
            for handler in logger.handlers:
                handler.setLevel(log_level)

# Default logger instance, import and use anywhere
# NOTE: logger.info("[tag] message"), .warning(...), .error(...)
logger = CustomLogger.get_logger()
