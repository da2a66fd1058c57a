"""Allow `python -m cvschmidt`."""

from .cli import entry

entry()
