# Copyright 2026 The neon2rvv Authors
# SPDX-License-Identifier: Apache-2.0
"""NEON to RISC-V Vector source migration.

Thin wrapper over the compiled ``_neon2rvv`` extension. In an installed
package the extension lives next to this file; for in-tree test runs the
``NEON2RVV_EXT_DIR`` environment variable points at the build directory
holding the extension.
"""

import os
import sys

try:
    from . import _neon2rvv as _core
except ImportError:  # in-tree layout: extension built by plain CMake
    _ext_dir = os.environ.get("NEON2RVV_EXT_DIR")
    if not _ext_dir:
        raise
    if _ext_dir not in sys.path:
        sys.path.insert(0, _ext_dir)
    import _neon2rvv as _core

translate = _core.translate
check = _core.check
map_type = _core.map_type
mapped_type_count = _core.mapped_type_count
catalog = _core.catalog
__version__ = _core.__version__

__all__ = [
    "translate",
    "check",
    "map_type",
    "mapped_type_count",
    "catalog",
    "__version__",
]
