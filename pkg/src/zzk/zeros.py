"""Tables of Riemann-zero ordinates tau_k and the zero-counting function."""
from __future__ import annotations

import hashlib
import math
import os
import urllib.error
import urllib.request
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Optional, Union

import numpy as np

from .results import DomainError, ZzkError

ODLYZKO_100K_URL = "https://www-users.cse.umn.edu/~odlyzko/zeta_tables/zeros1"
PRESETS = {"odlyzko-100k": ODLYZKO_100K_URL}
TAU1_SQUARED = 199.790455
BUNDLED_NAME = "zeros_2k.txt"
CACHED_NAME = "zeros_100k.txt"


class ZerosFormatError(ZzkError, ValueError):
    """A zeros file could not be parsed or failed validation."""


class DigestMismatch(ZzkError):
    """Downloaded data does not match the expected SHA-256 digest."""


class TransportError(ZzkError, OSError):
    """Download failed."""


@dataclass(frozen=True)
class ZerosTable:
    """Ascending positive ordinates tau_k of the nontrivial zeros 1/2 +- i tau_k."""

    ordinates: np.ndarray
    source: str = "unknown"
    stated_digits: int = 9
    _squares: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        arr = np.array(self.ordinates, dtype=float)
        if arr.ndim != 1:
            raise ZerosFormatError("ordinates must be one-dimensional")
        if arr.size and arr[0] <= 0:
            raise ZerosFormatError("ordinates must be positive")
        if np.any(np.diff(arr) < 0):
            raise ZerosFormatError("ordinates must be non-decreasing")
        arr.setflags(write=False)
        sq = arr * arr
        sq.setflags(write=False)
        object.__setattr__(self, "ordinates", arr)
        object.__setattr__(self, "_squares", sq)

    @property
    def count(self) -> int:
        return int(self.ordinates.size)

    def __len__(self) -> int:
        return self.count

    @property
    def squares(self) -> np.ndarray:
        return self._squares

    @property
    def tau_max(self) -> float:
        return float(self.ordinates[-1])

    def head(self, K: int) -> "ZerosTable":
        if not 0 <= K <= self.count:
            raise DomainError(f"K={K} outside 0..{self.count}")
        return ZerosTable(self.ordinates[:K], source=f"{self.source}[:{K}]", stated_digits=self.stated_digits)

    def serialize(self) -> str:
        d = self.stated_digits
        return "".join(f"{t:.{d}f}\n" for t in self.ordinates)


def parse_zeros(lines: Union[str, Iterable[str]], source: str = "text", stated_digits: Optional[int] = None) -> ZerosTable:
    """Parse one ordinate per line; '#' lines and blank lines are skipped."""
    if isinstance(lines, str):
        lines = lines.splitlines()
    values: list[float] = []
    digits = 0
    prev = -math.inf
    for lineno, raw in enumerate(lines, start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        try:
            x = float(line)
        except ValueError:
            raise ZerosFormatError(f"line {lineno}: not a number: {line!r}") from None
        if not math.isfinite(x) or x <= 0:
            raise ZerosFormatError(f"line {lineno}: ordinate must be positive and finite")
        if x < prev:
            raise ZerosFormatError(f"line {lineno}: ordinates must be non-decreasing ({x} after {prev})")
        prev = x
        if "." in line:
            digits = max(digits, len(line.split(".", 1)[1].rstrip()))
        values.append(x)
    if not values:
        raise ZerosFormatError("empty zeros table")
    return ZerosTable(np.asarray(values), source=source, stated_digits=stated_digits or digits or 9)


def load_zeros(path: Union[str, os.PathLike]) -> ZerosTable:
    path = Path(path)
    with path.open() as fh:
        return parse_zeros(fh, source=str(path))


def bundled_zeros() -> ZerosTable:
    """The first 2,000 ordinates shipped with the package (9 decimals)."""
    text = resources.files("zzk").joinpath("data").joinpath(BUNDLED_NAME).read_text()
    return parse_zeros(text, source="bundled-2k")


def cache_dir() -> Path:
    return Path(os.environ.get("ZZK_CACHE_DIR") or Path.home() / ".cache" / "zzk")


def default_zeros(allow_bundled: bool = True) -> ZerosTable:
    """Resolve the default table: $ZZK_ZEROS, then the cached 100k file, then the bundled one."""
    env = os.environ.get("ZZK_ZEROS")
    if env:
        return load_zeros(env)
    cached = cache_dir() / CACHED_NAME
    if cached.exists():
        return load_zeros(cached)
    if allow_bundled:
        return bundled_zeros()
    raise FileNotFoundError(f"no zeros table at {cached}; run `zzk fetch --preset odlyzko-100k`")


def fetch_zeros(url: str, expected_sha256: Optional[str] = None, dest: Union[str, os.PathLike, None] = None,
                timeout: float = 60.0) -> ZerosTable:
    """Download a zeros file, verify its SHA-256 digest when given, cache and parse it.

    Without an expected digest the computed one is written next to the file
    so later fetches can be checked against it.
    """
    dest = Path(dest) if dest is not None else cache_dir() / CACHED_NAME
    try:
        with urllib.request.urlopen(url, timeout=timeout) as resp:
            data = resp.read()
    except (urllib.error.URLError, OSError, ValueError) as exc:
        raise TransportError(f"could not fetch {url}: {exc}") from exc
    digest = hashlib.sha256(data).hexdigest()
    if expected_sha256 is not None and digest.lower() != expected_sha256.lower():
        raise DigestMismatch(f"sha256 {digest} does not match expected {expected_sha256}")
    table = parse_zeros(data.decode("ascii", errors="strict"), source=url)
    dest.parent.mkdir(parents=True, exist_ok=True)
    tmp = dest.with_suffix(dest.suffix + ".part")
    tmp.write_bytes(data)
    tmp.replace(dest)
    dest.with_suffix(dest.suffix + ".sha256").write_text(digest + "\n")
    return table


def counting_estimate(T):
    """Smooth count of zeros below T: (T/2pi)(log(T/2pi) - 1)."""
    x = np.asarray(T, dtype=float) / (2.0 * math.pi)
    if np.any(x <= 0):
        raise DomainError("T must be positive")
    out = x * (np.log(x) - 1.0)
    return float(out) if out.ndim == 0 else out


def count_below(table: ZerosTable, T: float) -> int:
    """Number of ordinates strictly below T (T must lie within the table's coverage)."""
    if T > table.tau_max:
        raise DomainError(f"T={T} exceeds table coverage (max ordinate {table.tau_max})")
    return int(np.searchsorted(table.ordinates, T, side="left"))
