from .config import Settings, get_settings
from .logging import configure_logging, get_logger
from .registry import get_entry_metadata, make_register, select

__all__ = ['Settings', 'get_settings', 'configure_logging', 'get_logger', 'get_entry_metadata',
           'make_register', 'select']
