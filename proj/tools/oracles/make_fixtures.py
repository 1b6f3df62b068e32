#!/usr/bin/env python3
"""Writes the reference manifest, component graph and the five single-rule
mutant graphs under fixtures/. Run once; the outputs are checked in."""
import copy
import hashlib
import json
import pathlib

ROOT = pathlib.Path(__file__).resolve().parents[2]
FIX = ROOT / "fixtures"


def digest(tag):
    return hashlib.sha256(tag.encode()).hexdigest()


SERVER = {
    "component_id": "shufflepuck-server",
    "code_digest": digest("shufflepuck-server reference build v1"),
    "input_labels": ["RawInput", "PlayerIdentity"],
    "output_labels": ["Aggregate", "PlayerMetric"],
    "declassifiers": [
        {"kind": "Pseudonymize", "input_label": "PlayerIdentity",
         "output_label": "Pseudonymous"},
        {"kind": "AggregateK", "input_label": "Pseudonymous",
         "output_label": "Aggregate", "k": 5},
    ],
    "egress_sinks": [
        {"sink_id": "highscores", "label": "Aggregate", "kind": "network"},
        {"sink_id": "ops-log", "label": "Aggregate", "kind": "persistence"},
    ],
}

CLIENT = {
    "component_id": "client-app",
    "code_digest": digest("shufflepuck client core reference build v1"),
    "input_labels": ["Aggregate", "PlayerMetric", "RawInput", "PlayerIdentity"],
    "output_labels": ["RawInput", "PlayerIdentity"],
    "declassifiers": [],
    "egress_sinks": [],
}

LEADERBOARD = {
    "component_id": "leaderboard",
    "code_digest": digest("shufflepuck leaderboard renderer v1"),
    "input_labels": ["Aggregate"],
    "output_labels": ["Aggregate"],
    "declassifiers": [],
    "egress_sinks": [
        {"sink_id": "public-highscores", "label": "Aggregate", "kind": "network"},
    ],
}

EDGES = [
    {"from": "client-app", "to": "shufflepuck-server", "label": "RawInput",
     "via_declassifier": None},
    {"from": "client-app", "to": "shufflepuck-server", "label": "PlayerIdentity",
     "via_declassifier": None},
    {"from": "shufflepuck-server", "to": "client-app", "label": "PlayerMetric",
     "via_declassifier": None},
    {"from": "shufflepuck-server", "to": "client-app", "label": "Aggregate",
     "via_declassifier": "AggregateK"},
    {"from": "shufflepuck-server", "to": "leaderboard", "label": "Aggregate",
     "via_declassifier": "AggregateK"},
]


def graph():
    return {
        "components": [copy.deepcopy(CLIENT), copy.deepcopy(SERVER),
                       copy.deepcopy(LEADERBOARD)],
        "edges": copy.deepcopy(EDGES),
        "k_min": 5,
    }


def node(g, cid):
    return next(c for c in g["components"] if c["component_id"] == cid)


def mutant_r1():
    # The high-score edge carries per-player metrics without aggregation.
    g = graph()
    edge = g["edges"][4]
    edge["label"], edge["via_declassifier"] = "PlayerMetric", None
    node(g, "leaderboard")["input_labels"].append("PlayerMetric")
    return g


def mutant_r2():
    # The pseudonym-key holder is fed pseudonyms back from another component.
    g = graph()
    node(g, "leaderboard")["output_labels"].append("Pseudonymous")
    node(g, "shufflepuck-server")["input_labels"].append("Pseudonymous")
    g["edges"].append({"from": "leaderboard", "to": "shufflepuck-server",
                       "label": "Pseudonymous", "via_declassifier": None})
    return g


def mutant_r3():
    g = graph()
    node(g, "shufflepuck-server")["declassifiers"][1]["k"] = 2
    return g


def mutant_r4():
    g = graph()
    node(g, "shufflepuck-server")["code_digest"] = ""
    return g


def mutant_r5():
    # Raw logins persisted ahead of pseudonymization.
    g = graph()
    node(g, "shufflepuck-server")["egress_sinks"].append(
        {"sink_id": "login-archive", "label": "PlayerIdentity",
         "kind": "persistence"})
    return g


def r1_manifest():
    m = copy.deepcopy(SERVER)
    m["egress_sinks"].append(
        {"sink_id": "shot-telemetry", "label": "RawInput", "kind": "network"})
    return m


def tampered_manifest():
    # Same declared flows, different build: attests as an unknown measurement.
    m = copy.deepcopy(SERVER)
    m["code_digest"] = digest("shufflepuck-server patched build")
    return m


PLATFORM_KEY = {"key_id": "fixture-platform", "seed": "33" * 32}


def server_config(manifest):
    return {
        "tcp_listen": "127.0.0.1:0",
        "ws_listen": "127.0.0.1:0",
        "k_min": 5,
        "manifest_path": manifest,
        "platform_key_path": "platform-key.json",
        "sink_dir": "run/sinks",
        "pseudonym_key_path": "pseudonym-key.hex",
    }


# Each turn is one defense by the defender followed by one shot. The
# straight 566 shot scores 3 unless the paddle is within reach of x=2500.
BOT_SCRIPT = [
    {"paddle_x": 400, "angle": 0, "force": 566},
    {"paddle_x": 2500, "angle": 0, "force": 566},
    {"paddle_x": 4000, "angle": 35, "force": 540},
    {"paddle_x": 1000, "angle": -120, "force": 700},
]


def dump(path, obj):
    path.write_text(json.dumps(obj, indent=2) + "\n")


def main():
    FIX.mkdir(exist_ok=True)
    dump(FIX / "manifest-a.json", SERVER)
    # Same manifest, label sets listed in a different order.
    shuffled = copy.deepcopy(SERVER)
    shuffled["input_labels"].reverse()
    shuffled["output_labels"].reverse()
    dump(FIX / "manifest-a-reordered.json", shuffled)
    dump(FIX / "manifest-r1.json", r1_manifest())
    dump(FIX / "graph-reference.json", graph())
    dump(FIX / "manifest-a-tampered.json", tampered_manifest())
    dump(FIX / "platform-key.json", PLATFORM_KEY)
    (FIX / "pseudonym-key.hex").write_text("44" * 32 + "\n")
    dump(FIX / "server-honest.json", server_config("manifest-a.json"))
    dump(FIX / "server-tampered.json", server_config("manifest-a-tampered.json"))
    dump(FIX / "server-r1.json", server_config("manifest-r1.json"))
    dump(FIX / "bot-script.json", BOT_SCRIPT)
    for i, fn in enumerate([mutant_r1, mutant_r2, mutant_r3, mutant_r4, mutant_r5], 1):
        dump(FIX / f"graph-mutant-r{i}.json", fn())


if __name__ == "__main__":
    main()
