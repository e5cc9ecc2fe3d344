import os
import sys
from importlib.machinery import PathFinder

_build = os.environ.get("HERBRAND_PYTHON_DIR")


class _BuildTreeFinder:
    """Resolve the package from the build tree ahead of any installed copy."""

    @staticmethod
    def find_spec(name, path=None, target=None):
        if name == "herbrand":
            return PathFinder.find_spec(name, [_build])
        if name.startswith("herbrand."):
            return PathFinder.find_spec(name, path)
        return None


if _build:
    sys.meta_path.insert(0, _BuildTreeFinder)
