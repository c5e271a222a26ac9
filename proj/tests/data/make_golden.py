#!/usr/bin/env python3
"""Writes golden_vectors.json using Python's hashlib as the reference SHA-256.

The C++ library never runs this; it only checks itself against the output.
"""
import hashlib
import json
import pathlib
import random

BITS = 128
LABELS = {"H": 0x48, "F": 0x46}


def labelled(label, data, bits=BITS):
    d = hashlib.sha256(bytes([LABELS[label]]) + data).digest()
    return d[: bits // 8]


def concat(fields):
    out = b""
    for f in fields:
        out += (len(f) * 8).to_bytes(2, "big") + f
    return out


def main():
    rng = random.Random(20261016)
    inputs = [b"", b"abc", b"\x00", bytes(range(64))]
    inputs += [rng.randbytes(rng.randrange(1, 100)) for _ in range(8)]
    # Protocol-shaped inputs: concat of two and three 16-byte fields.
    inputs += [concat([rng.randbytes(16), rng.randbytes(16)]) for _ in range(4)]
    inputs += [concat([rng.randbytes(16) for _ in range(3)]) for _ in range(4)]

    vectors = []
    for data in inputs:
        for label in ("H", "F"):
            vectors.append({"label": label, "input-hex": data.hex(),
                            "output-hex": labelled(label, data).hex()})

    truncate = []
    for data, m in [(b"abc", 16), (b"abc", 8), (b"", 64), (b"rfid", 120)]:
        for label in ("H", "F"):
            truncate.append({"label": label, "input-hex": data.hex(), "m": m,
                             "output-hex": labelled(label, data)[: m // 8].hex()})

    concats = [{"fields": [], "output-hex": ""}]
    for n in (1, 2, 3):
        fields = [rng.randbytes(16) for _ in range(n)]
        concats.append({"fields": [f.hex() for f in fields],
                        "output-hex": concat(fields).hex()})
    fields = [rng.randbytes(4), rng.randbytes(32)]
    concats.append({"fields": [f.hex() for f in fields],
                    "output-hex": concat(fields).hex()})

    out = {"hash": "sha256-label-prefixed", "bits": BITS, "vectors": vectors,
           "truncate": truncate, "concat": concats}
    path = pathlib.Path(__file__).with_name("golden_vectors.json")
    path.write_text(json.dumps(out, indent=2) + "\n")


if __name__ == "__main__":
    main()
