from .config import Config, get_config
from .logging_setup import configure_logging

__all__ = ['Config', 'get_config', 'configure_logging']
