"""
Matrix Dump Manager

Writes realized action matrices and morphism blocks as CSV files for
inspection outside gsemi (``--dump-matrices DIR``).
"""

import logging
import re
from pathlib import Path
from typing import List

import numpy as np

logger = logging.getLogger(__name__)

_UNSAFE = re.compile(r"[^\w.\-]+")


def _safe(name: str) -> str:
    return _UNSAFE.sub("_", name).strip("_") or "module"


class MatrixDumper:
    """Write F_p matrices under one directory.

    File names are ``<prefix>__<part>.csv``; every written path is kept in
    ``written`` in order.

    Example:
        >>> dumper = MatrixDumper("dumps")
        >>> dumper.dump_module("e_1", module)
        >>> dumper.written[0].name
        'e_1__x.csv'
    """

    def __init__(self, out_dir: str):
        self.out_dir = Path(out_dir)
        self.out_dir.mkdir(parents=True, exist_ok=True)
        self.written: List[Path] = []
        logger.info(f"Dumping matrices to {self.out_dir}")

    def dump_matrix(self, prefix: str, part: str, matrix: np.ndarray) -> Path:
        """Save one integer matrix; empty matrices produce an empty file."""
        path = self.out_dir / f"{_safe(prefix)}__{_safe(part)}.csv"
        data = np.atleast_2d(np.asarray(matrix, dtype=np.int64))
        if data.size == 0:
            path.write_text("", encoding="utf-8")
        else:
            np.savetxt(path, data, fmt="%d", delimiter=",")
        self.written.append(path)
        logger.debug(f"Wrote {path} with shape {np.shape(matrix)}")
        return path

    def dump_module(self, prefix: str, module) -> List[Path]:
        """One file per arrow action of a realized module."""
        return [
            self.dump_matrix(prefix, arrow.name, module.action_matrix(arrow.name))
            for arrow in module.algebra.quiver.arrows
        ]
