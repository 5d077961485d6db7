"""Minimal streaming FASTA reader and writer."""

from __future__ import annotations

from dataclasses import dataclass
from typing import IO, Iterable, Iterator


class FastaFormatError(ValueError):
    pass


@dataclass
class Record:
    header: str
    sequence: str


def read_fasta(handle: Iterable[str]) -> Iterator[Record]:
    """Lazily yield records; sequences are upper-cased and may span lines.

    Blank lines are ignored. Sequence text before the first header is an
    error.
    """
    header = None
    chunks: list[str] = []
    for lineno, line in enumerate(handle, 1):
        line = line.strip()
        if not line:
            continue
        if line.startswith(">"):
            if header is not None:
                yield Record(header, "".join(chunks))
            header = line[1:].strip()
            chunks = []
        elif header is None:
            raise FastaFormatError(f"line {lineno}: sequence data before the first '>' header")
        else:
            chunks.append(line.upper())
    if header is not None:
        yield Record(header, "".join(chunks))


def write_fasta(records: Iterable[Record], fh: IO[str], width: int = 70) -> None:
    for rec in records:
        fh.write(f">{rec.header}\n")
        seq = rec.sequence
        for i in range(0, len(seq), width):
            fh.write(seq[i:i + width] + "\n")
        if not seq:
            fh.write("\n")
