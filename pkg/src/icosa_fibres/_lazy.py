# SPDX-FileCopyrightText: 2024-present icosa-fibres contributors
#
# SPDX-License-Identifier: MIT

"""Lazy loading of the heavy third-party modules (sympy, mpmath) this package leans on."""

from __future__ import annotations

import importlib.util
import sys
import types


__all__ = ("lazy_import_module",)


def lazy_import_module(name: str) -> types.ModuleType:
    """Return a module object for ``name`` whose body only executes on first attribute access.

    Only top-level names are supported. If the module is already imported, that object is used as is.

    Notes
    -----
    Follows the LazyLoader recipe from the importlib docs. mpmath is only needed for numeric embeddings, so most runs
    never execute it. sympy executes on the first cyclotomic table, inverse or divisor list, which any field element
    beyond the rationals requires.
    """

    if "." in name:
        msg = f"only top-level modules can be loaded lazily, got {name!r}"
        raise ValueError(msg)

    if name in sys.modules:
        return sys.modules[name]

    for finder in sys.meta_path:
        spec = finder.find_spec(name, None)
        if spec is not None:
            break
    else:
        msg = f"No module named {name!r}"
        raise ModuleNotFoundError(msg, name=name)

    if spec.loader is None:
        msg = "missing loader"
        raise ImportError(msg, name=spec.name)

    spec.loader = loader = importlib.util.LazyLoader(spec.loader)
    module = importlib.util.module_from_spec(spec)
    sys.modules[name] = module
    loader.exec_module(module)
    return module
