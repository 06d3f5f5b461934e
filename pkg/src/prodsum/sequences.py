"""Integer sequence tables and resumable scans for zero terms of ``s``.

Tables are indexed from 1.  Checkpoints are plain text::

    format_version=1
    next_n=32

    1\t2\t0\t
    8\t19\t3\t2^2,3^1

one record per processed prime index: ``n``, ``p_n``, ``s``, and the witness
as comma-separated ``value^multiplicity`` pairs (empty when ``s = 0``).
"""

from __future__ import annotations

import json
import os
import tempfile
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import NamedTuple

from .errors import CheckpointCorrupt, UnknownSequence
from .forms import representation_counts
from .primes import nth_prime
from .smallest_k import MultiplicityProfile, b_value, s_sequence, smallest_k_direct

FORMAT_VERSION = 1
_PARALLEL_MIN = 2000

# external catalogue numbers, kept as labels only
SEQUENCE_LABELS = {
    "nu2": "A072670",
    "nu3": "A260803",
    "nu4": "A260804",
    "smallest_k": "A260965",
}


@dataclass(frozen=True)
class SequenceTable:
    name: str
    offset: int
    values: tuple[int, ...]

    @property
    def label(self) -> str:
        return SEQUENCE_LABELS[self.name]

    def __getitem__(self, index: int) -> int:
        """Value at sequence index ``index`` (not list position)."""
        if not self.offset <= index < self.offset + len(self.values):
            raise IndexError(index)
        return self.values[index - self.offset]

    def to_csv(self) -> str:
        lines = ["index,value"]
        lines += [f"{i},{v}" for i, v in enumerate(self.values, start=self.offset)]
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps({"name": self.name, "offset": self.offset, "values": list(self.values)})

    @classmethod
    def from_json(cls, text: str) -> SequenceTable:
        doc = json.loads(text)
        return cls(doc["name"], int(doc["offset"]), tuple(int(v) for v in doc["values"]))


def generate_table(name: str, count: int, workers: int = 1) -> SequenceTable:
    """Compute the first ``count`` terms of a named sequence.

    ``nu2``/``nu3``/``nu4`` count representations of ``n = 1, 2, ...`` at
    arity 2/3/4; ``smallest_k`` is ``s`` over the first primes, optionally
    spread over ``workers`` processes.
    """
    if count < 1:
        raise ValueError(f"count must be >= 1, got {count}")
    if name in ("nu2", "nu3", "nu4"):
        counts = representation_counts(count, int(name[2]))
        values = tuple(int(c) for c in counts[1:])
    elif name == "smallest_k":
        if workers > 1 and count >= _PARALLEL_MIN:
            cp = scan_zero_terms(ScanCheckpoint(), count, workers=workers)
            values = tuple(scan_values(cp))
        else:
            values = tuple(s_sequence(count))
    else:
        raise UnknownSequence(f"unknown sequence {name!r}; expected one of {sorted(SEQUENCE_LABELS)}")
    return SequenceTable(name, 1, values)


class FoundRecord(NamedTuple):
    n: int
    p: int
    k: int
    witness: MultiplicityProfile


@dataclass(frozen=True)
class ScanCheckpoint:
    next_n: int = 1
    zero_indices: tuple[int, ...] = ()
    found_records: tuple[FoundRecord, ...] = field(default=())
    format_version: int = FORMAT_VERSION

    def validate(self) -> None:
        if self.format_version != FORMAT_VERSION:
            raise CheckpointCorrupt(f"unsupported format_version {self.format_version}")
        if self.next_n < 1:
            raise CheckpointCorrupt(f"next_n must be >= 1, got {self.next_n}")
        zeros = self.zero_indices
        if any(a >= b for a, b in zip(zeros, zeros[1:])):
            raise CheckpointCorrupt("zero_indices not strictly increasing")
        if zeros and (zeros[0] < 1 or zeros[-1] >= self.next_n):
            raise CheckpointCorrupt("zero index outside [1, next_n)")
        seen = set(zeros)
        for rec in self.found_records:
            if not 1 <= rec.n < self.next_n or rec.n in seen:
                raise CheckpointCorrupt(f"record for n={rec.n} out of range or duplicated")
            seen.add(rec.n)
            if rec.witness.arity() != rec.k or b_value(rec.witness) != rec.p:
                raise CheckpointCorrupt(f"witness {rec.witness} does not certify s={rec.k} for p={rec.p}")
            if nth_prime(rec.n).p != rec.p:
                raise CheckpointCorrupt(f"p_{rec.n} is not {rec.p}")

    def to_text(self) -> str:
        rows = [(n, nth_prime(n).p, 0, "") for n in self.zero_indices]
        rows += [
            (r.n, r.p, r.k, ",".join(f"{v}^{t}" for v, t in r.witness.items))
            for r in self.found_records
        ]
        rows.sort()
        lines = [f"format_version={self.format_version}", f"next_n={self.next_n}", ""]
        lines += ["\t".join(map(str, row)) for row in rows]
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> ScanCheckpoint:
        header, sep, body = text.partition("\n\n")
        if not sep:
            raise CheckpointCorrupt("missing blank line after header")
        meta = {}
        for line in header.splitlines():
            key, eq, value = line.partition("=")
            if not eq:
                raise CheckpointCorrupt(f"bad header line {line!r}")
            meta[key.strip()] = value.strip()
        zeros: list[int] = []
        found: list[FoundRecord] = []
        try:
            version = int(meta["format_version"])
            next_n = int(meta["next_n"])
            for line in body.splitlines():
                if not line:
                    continue
                n, p, k, witness = line.split("\t")
                if int(k) == 0:
                    if witness:
                        raise CheckpointCorrupt(f"zero record with witness: {line!r}")
                    if nth_prime(int(n)).p != int(p):
                        raise CheckpointCorrupt(f"p_{n} is not {p}")
                    zeros.append(int(n))
                else:
                    pairs = [pair.split("^") for pair in witness.split(",")]
                    profile = MultiplicityProfile((int(v), int(t)) for v, t in pairs)
                    found.append(FoundRecord(int(n), int(p), int(k), profile))
        except (KeyError, ValueError) as exc:
            raise CheckpointCorrupt(str(exc)) from exc
        cp = cls(next_n, tuple(zeros), tuple(found), version)
        cp.validate()
        return cp


def save_checkpoint(cp: ScanCheckpoint, path: str | os.PathLike) -> None:
    """Write ``cp`` to ``path`` atomically (temp file in the same directory, then rename)."""
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent or ".", prefix=path.name, suffix=".tmp")
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(cp.to_text())
            fh.flush()
            os.fsync(fh.fileno())
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def load_checkpoint(path: str | os.PathLike) -> ScanCheckpoint:
    return ScanCheckpoint.from_text(Path(path).read_text(encoding="utf-8"))


def _solve_index(n: int) -> tuple[int, int, int, MultiplicityProfile | None]:
    p = nth_prime(n).p
    result = smallest_k_direct(p)
    return n, p, result.k, result.witness


def scan_zero_terms(cp: ScanCheckpoint, budget: int, workers: int = 1) -> ScanCheckpoint:
    """Process prime indices ``next_n .. next_n + budget - 1`` and return the advanced checkpoint.

    With ``workers > 1`` indices are solved in a process pool; results are
    committed in index order, so the checkpoint does not depend on it.
    """
    cp.validate()
    if budget < 1:
        raise ValueError(f"budget must be >= 1, got {budget}")
    indices = range(cp.next_n, cp.next_n + budget)
    if workers > 1:
        # warm the sieve so workers inherit it on fork
        nth_prime(indices[-1])
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_solve_index, indices, chunksize=max(1, budget // (4 * workers))))
    else:
        results = [_solve_index(n) for n in indices]
    zeros = list(cp.zero_indices)
    found = list(cp.found_records)
    for n, p, k, witness in results:
        if k == 0:
            zeros.append(n)
        else:
            found.append(FoundRecord(n, p, k, witness))
    return ScanCheckpoint(cp.next_n + budget, tuple(zeros), tuple(found), cp.format_version)


def scan_values(cp: ScanCheckpoint) -> list[int]:
    """``s`` values for indices ``1 .. next_n - 1`` of a scan started from a fresh checkpoint."""
    values = [0] * (cp.next_n - 1)
    for rec in cp.found_records:
        values[rec.n - 1] = rec.k
    return values
