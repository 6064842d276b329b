from importlib.metadata import version, PackageNotFoundError
from .momentpoly import main

try:
    __version__ = version("momentpoly")
except PackageNotFoundError:
    # Not installed
    __version__ = "not installed"
