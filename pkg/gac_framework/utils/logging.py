import logging
import sys

_TAGS = {
    "gac_framework.engine": "ENGINE",
    "gac_framework.propagators": "PROPAGATE",
    "gac_framework.gadgets": "GADGET",
    "gac_framework.harness": "SUITE",
    "gac_framework.core": "CORE",
}

_configured = False


class _TagFilter(logging.Filter):
    def filter(self, record: logging.LogRecord) -> bool:
        record.tag = "GAC"
        for prefix, tag in _TAGS.items():
            if record.name.startswith(prefix):
                record.tag = tag
                break
        return True


def configure_logging(level: str = "WARNING"):
    """Route package loggers to stderr as `[TAG] message` lines"""
    global _configured
    root = logging.getLogger("gac_framework")
    root.setLevel(level.upper())
    if _configured:
        return
    handler = logging.StreamHandler(sys.stderr)
    handler.addFilter(_TagFilter())
    handler.setFormatter(logging.Formatter("[%(tag)s] %(message)s"))
    root.addHandler(handler)
    root.propagate = False
    _configured = True


def get_logger(name: str) -> logging.Logger:
    return logging.getLogger(name)
