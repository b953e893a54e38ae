"""OEIS b-file retrieval, parsing, caching, and term-by-term verification.

Offline first: reference terms for the four identified sequences ship with the
package, so checks run with no network.  A live fetch is available behind an
injectable transport and a small on-disk cache (``<cache>/<id>.bfile``; the
directory defaults to ``~/.cache/latticerect`` and can be moved with the
``LATTICERECT_OEIS_CACHE`` environment variable).
"""
from __future__ import annotations

import dataclasses
import os
import re
import urllib.error
import urllib.request
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Callable, Optional

from .formulas import OEIS_IDS, SequenceId, evaluate

#: Accepted retrieval policies for :func:`fetch`.
SOURCES = ("network-then-cache", "cache-only", "fixture-only")

#: Which of our sequences each supported OEIS entry lists.
SEQUENCE_FOR_ID = {oeis_id: seq for seq, oeis_id in OEIS_IDS.items()}

_ID_RE = re.compile(r"\AA[0-9]{6}\Z")
_ENV_CACHE = "LATTICERECT_OEIS_CACHE"
_ENV_URL = "LATTICERECT_OEIS_URL"


class FetchError(Exception):
    """A b-file could not be retrieved from the requested source."""


class BFileError(ValueError):
    """Malformed b-file text."""


@dataclass(frozen=True)
class BFile:
    """Parsed b-file: ordered (index, value) terms with strictly increasing indices."""

    sequence_id: Optional[str]
    terms: tuple[tuple[int, int], ...]
    source: Optional[str] = field(default=None, compare=False)


def parse_bfile(text: str, sequence_id: Optional[str] = None) -> BFile:
    """Parse b-file text: ``<index> <value>`` lines, blank lines, # comments.

    Anything else is an error carrying its line number, as is a non-increasing
    index column.
    """
    if sequence_id is not None and not _ID_RE.match(sequence_id):
        raise ValueError(f"bad OEIS id {sequence_id!r}")
    terms = []
    last_index = None
    for num, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise BFileError(f"line {num}: expected '<index> <value>', got {raw!r}")
        try:
            index, value = int(parts[0]), int(parts[1])
        except ValueError:
            raise BFileError(f"line {num}: non-integer field in {raw!r}") from None
        if last_index is not None and index <= last_index:
            raise BFileError(f"line {num}: index {index} does not increase past {last_index}")
        last_index = index
        terms.append((index, value))
    return BFile(sequence_id, tuple(terms))


def format_bfile(bfile: BFile) -> str:
    """Render terms back to b-file text; parse(format(b)) == b."""
    return "".join(f"{i} {v}\n" for i, v in bfile.terms)


def default_cache_dir() -> Path:
    env = os.environ.get(_ENV_CACHE)
    if env:
        return Path(env)
    return Path.home() / ".cache" / "latticerect"


def bfile_url(sequence_id: str) -> str:
    base = os.environ.get(_ENV_URL, "https://oeis.org").rstrip("/")
    return f"{base}/{sequence_id}/b{sequence_id[1:]}.txt"


def _download(url: str) -> str:
    try:
        with urllib.request.urlopen(url, timeout=30) as response:
            return response.read().decode("utf-8")
    except (urllib.error.URLError, OSError, ValueError) as err:
        raise FetchError(f"download failed for {url}: {err}") from None


def _fixture_text(sequence_id: str) -> str:
    path = resources.files(__package__).joinpath("fixtures", f"{sequence_id}.bfile")
    if not path.is_file():
        raise FetchError(f"no bundled reference terms for {sequence_id}")
    return path.read_text(encoding="utf-8")


def fetch(sequence_id: str, source: str = "network-then-cache",
          cache_dir: Optional[Path] = None,
          transport: Optional[Callable[[str], str]] = None) -> BFile:
    """Retrieve a b-file according to the source policy.

    ``network-then-cache`` downloads (via ``transport``, default urllib) and
    writes the cache, falling back to a warm cache when the download fails;
    ``cache-only`` and ``fixture-only`` never touch the network.  Retrieval
    failures raise FetchError; malformed content raises BFileError.
    """
    if not _ID_RE.match(sequence_id):
        raise ValueError(f"bad OEIS id {sequence_id!r}")
    if source not in SOURCES:
        raise ValueError(f"unknown source {source!r}; expected one of {SOURCES}")
    if source == "fixture-only":
        bfile = parse_bfile(_fixture_text(sequence_id), sequence_id)
        return dataclasses.replace(bfile, source="fixture")
    cache_file = (Path(cache_dir) if cache_dir else default_cache_dir()) \
        / f"{sequence_id}.bfile"
    if source == "cache-only":
        if not cache_file.is_file():
            raise FetchError(f"no cached b-file at {cache_file}")
        bfile = parse_bfile(cache_file.read_text(encoding="utf-8"), sequence_id)
        return dataclasses.replace(bfile, source="cache")
    download = transport if transport is not None else _download
    try:
        text = download(bfile_url(sequence_id))
    except FetchError:
        if cache_file.is_file():
            bfile = parse_bfile(cache_file.read_text(encoding="utf-8"), sequence_id)
            return dataclasses.replace(bfile, source="cache")
        raise
    bfile = parse_bfile(text, sequence_id)  # validate before caching
    cache_file.parent.mkdir(parents=True, exist_ok=True)
    scratch = cache_file.with_suffix(".bfile.tmp")
    scratch.write_text(text, encoding="utf-8")
    scratch.replace(cache_file)  # readers never see a partial file
    return dataclasses.replace(bfile, source="network")


@dataclass(frozen=True)
class SeqCheckReport:
    """Term-by-term comparison of computed values against OEIS reference terms.

    ``first_mismatch`` is ``(n, reference, computed)`` for the smallest
    disagreeing n, or None when every term in the checked range matches.
    """

    sequence_id: str
    checked_range: tuple[int, int]
    matches: int
    first_mismatch: Optional[tuple[int, int, int]]
    source: str

    @property
    def ok(self) -> bool:
        return self.first_mismatch is None


def check(sequence_id: str, seq: SequenceId, n_max: int,
          source: str = "fixture-only", cache_dir: Optional[Path] = None,
          transport: Optional[Callable[[str], str]] = None) -> SeqCheckReport:
    """Compare our closed form against the OEIS entry for n = 1..n_max.

    Only the four supported (OEIS id, sequence) pairings are accepted.  Terms
    are matched by the b-file's own index column, so an entry whose listing
    starts at 0 contributes its index-1 term to n = 1 (no silent shifting).
    """
    expected_seq = SEQUENCE_FOR_ID.get(sequence_id)
    if expected_seq is None:
        known = ", ".join(sorted(SEQUENCE_FOR_ID))
        raise ValueError(f"{sequence_id} is not a supported entry (known: {known})")
    if expected_seq is not seq:
        raise ValueError(
            f"{sequence_id} lists the {expected_seq.name.lower()} sequence, not {seq.name.lower()}")
    if n_max < 1:
        raise ValueError(f"n_max must be >= 1, got {n_max}")
    bfile = fetch(sequence_id, source=source, cache_dir=cache_dir, transport=transport)
    by_index = dict(bfile.terms)
    missing = [n for n in range(1, n_max + 1) if n not in by_index]
    if missing:
        raise ValueError(
            f"{sequence_id} b-file lacks terms for n={missing[0]} "
            f"(has indices {bfile.terms[0][0]}..{bfile.terms[-1][0]})")
    matches = 0
    first_mismatch = None
    for n in range(1, n_max + 1):
        reference = by_index[n]
        computed = evaluate(seq, n)
        if computed == reference:
            matches += 1
        elif first_mismatch is None:
            first_mismatch = (n, reference, computed)
    return SeqCheckReport(
        sequence_id=sequence_id,
        checked_range=(1, n_max),
        matches=matches,
        first_mismatch=first_mismatch,
        source=bfile.source or source,
    )
