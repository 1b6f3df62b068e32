#!/usr/bin/env python3
"""Independent encoder for the manifest canonical form.

Writes fixtures/manifest-a.canonical.bin; the measurement golden is then
taken with a separate hash tool:  sha256sum fixtures/manifest-a.canonical.bin
"""
import json
import pathlib
import struct
import sys

ROOT = pathlib.Path(__file__).resolve().parents[2]
LABELS = ["Public", "Aggregate", "Pseudonymous", "PlayerMetric", "RawInput",
          "PlayerIdentity"]
KINDS = {"Pseudonymize": 0, "AggregateK": 1}
SINKS = {"network": 0, "persistence": 1}


def prefixed(b):
    return struct.pack("<I", len(b)) + b


def label_set(names):
    encoded = sorted(bytes([LABELS.index(n)]) for n in names)
    return struct.pack("<I", len(encoded)) + b"".join(encoded)


def encode(m):
    out = prefixed(m["component_id"].encode())
    out += prefixed(bytes.fromhex(m["code_digest"]) if m["code_digest"] else b"")
    out += label_set(m["input_labels"])
    out += label_set(m["output_labels"])
    out += struct.pack("<I", len(m["declassifiers"]))
    for d in m["declassifiers"]:
        out += bytes([KINDS[d["kind"]], LABELS.index(d["input_label"]),
                      LABELS.index(d["output_label"])])
        out += struct.pack("<I", d.get("k", 0))
    out += struct.pack("<I", len(m["egress_sinks"]))
    for s in m["egress_sinks"]:
        out += prefixed(s["sink_id"].encode())
        out += bytes([LABELS.index(s["label"]), SINKS[s["kind"]]])
    return out


def main():
    src = ROOT / "fixtures" / "manifest-a.json"
    (ROOT / "fixtures" / "manifest-a.canonical.bin").write_bytes(
        encode(json.loads(src.read_text())))
    return 0


if __name__ == "__main__":
    sys.exit(main())
