"""On-disk coefficient cache.

File layout (UTF-8)::

    SYMCUBE-COEFFS 1
    weight=<k>
    terms=<N>
    <blank line>
    a_1
    ...
    a_N
"""

from __future__ import annotations

import logging
import os
import tempfile
from pathlib import Path

from ..errors import CacheFormatError
from .forms import Eigenform, eigenform

log = logging.getLogger(__name__)

MAGIC = "SYMCUBE-COEFFS"
FORMAT_VERSION = 1


def cache_path(cache_dir, k: int) -> Path:
    return Path(cache_dir) / f"weight{k}.coeffs"


def write_coefficients(path, f: Eigenform) -> None:
    """Atomically write ``f`` (temp file in the same directory, then rename)."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    lines = [f"{MAGIC} {FORMAT_VERSION}", f"weight={f.weight}", f"terms={f.precision}", ""]
    lines.extend(str(a) for a in f.coefficients[1:])
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8") as fh:
            fh.write("\n".join(lines) + "\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def read_coefficients(path) -> Eigenform:
    text = Path(path).read_text(encoding="utf-8").split("\n")
    try:
        magic, version = text[0].split()
        if magic != MAGIC or int(version) != FORMAT_VERSION:
            raise CacheFormatError(f"{path}: unsupported header {text[0]!r}")
        k = int(text[1].removeprefix("weight="))
        n = int(text[2].removeprefix("terms="))
        if text[3] != "":
            raise CacheFormatError(f"{path}: missing blank separator line")
        coeffs = [int(x) for x in text[4 : 4 + n]]
    except (ValueError, IndexError) as exc:
        raise CacheFormatError(f"{path}: malformed coefficient cache ({exc})") from exc
    if len(coeffs) != n:
        raise CacheFormatError(f"{path}: header says {n} terms, found {len(coeffs)}")
    return Eigenform(k, (0, *coeffs))


def cached_eigenform(k: int, n_terms: int, cache_dir=None) -> Eigenform:
    """Load from ``cache_dir`` when enough terms are stored, else compute and (re)write the cache."""
    if cache_dir is None:
        return eigenform(k, n_terms)
    path = cache_path(cache_dir, k)
    if path.exists():
        f = read_coefficients(path)
        if f.weight != k:
            raise CacheFormatError(f"{path}: stores weight {f.weight}, expected {k}")
        if f.precision >= n_terms:
            return Eigenform(k, f.coefficients[: n_terms + 1])
        log.info("extending cached weight-%d coefficients from %d to %d", k, f.precision, n_terms)
    f = eigenform(k, n_terms)
    write_coefficients(path, f)
    return f
