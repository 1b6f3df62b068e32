#!/usr/bin/env python3
"""Independent computation of the fixture handshake and one sealed frame.

Uses fixed test-only keys so every value is reproducible, and writes
fixtures/channel-vectors.json (shared with any other client implementation
that must be byte-compatible)."""
import hashlib
import hmac
import json
import pathlib
import struct

from cryptography.hazmat.primitives.asymmetric import ed25519, x25519
from cryptography.hazmat.primitives.ciphers.aead import ChaCha20Poly1305
from cryptography.hazmat.primitives import serialization

ROOT = pathlib.Path(__file__).resolve().parents[2]
RAW = dict(encoding=serialization.Encoding.Raw, format=serialization.PublicFormat.Raw)

NONCE = bytes(range(32))
CLIENT_SECRET = bytes([0x11]) * 32
SERVER_SECRET = bytes([0x22]) * 32
PLATFORM_SEED = bytes([0x33]) * 32
KEY_ID = b"fixture-platform"


def wire(msg_type, payload):
    return struct.pack("<I", len(payload) + 1) + bytes([msg_type]) + payload


def prefixed(b):
    return struct.pack("<I", len(b)) + b


def hkdf(ikm, salt, info):
    prk = hmac.new(salt, ikm, hashlib.sha256).digest()
    return hmac.new(prk, info + b"\x01", hashlib.sha256).digest()


def main():
    measurement = bytes.fromhex(
        (ROOT / "fixtures" / "manifest-a.measurement.txt").read_text().strip())
    c_priv = x25519.X25519PrivateKey.from_private_bytes(CLIENT_SECRET)
    s_priv = x25519.X25519PrivateKey.from_private_bytes(SERVER_SECRET)
    c_pub = c_priv.public_key().public_bytes(**RAW)
    s_pub = s_priv.public_key().public_bytes(**RAW)
    platform = ed25519.Ed25519PrivateKey.from_private_bytes(PLATFORM_SEED)
    platform_pub = platform.public_key().public_bytes(**RAW)

    hello = wire(0x01, NONCE + c_pub)
    report = hashlib.sha256(NONCE + c_pub + s_pub).digest()
    sig = platform.sign(measurement + report)
    quote = measurement + report + prefixed(KEY_ID) + prefixed(sig)
    attest = wire(0x02, s_pub + quote)
    transcript = hashlib.sha256(hello + attest).digest()

    shared = c_priv.exchange(x25519.X25519PublicKey.from_public_bytes(s_pub))
    assert shared == s_priv.exchange(x25519.X25519PublicKey.from_public_bytes(c_pub))
    key_c2s = hkdf(shared, transcript, b"zkg-v1 key c2s")
    key_s2c = hkdf(shared, transcript, b"zkg-v1 key s2c")

    # First client frame: a Login app message (0x20) for identity "alice".
    login = bytes([0x20]) + prefixed(b"alice")
    seq = 0
    ad = struct.pack("<Q", seq) + b"\x00"
    nonce = b"\x00" * 4 + struct.pack("<Q", seq)
    ct = ChaCha20Poly1305(key_c2s).encrypt(nonce, login, ad)
    frame = wire(0x10, struct.pack("<Q", seq) + ct)

    out = {
        "nonce": NONCE.hex(),
        "client_eph_secret": CLIENT_SECRET.hex(),
        "server_eph_secret": SERVER_SECRET.hex(),
        "platform_seed": PLATFORM_SEED.hex(),
        "platform_key_id": KEY_ID.decode(),
        "platform_public_key": platform_pub.hex(),
        "measurement": measurement.hex(),
        "client_hello_wire": hello.hex(),
        "server_attest_wire": attest.hex(),
        "report_data": report.hex(),
        "transcript_hash": transcript.hex(),
        "key_c2s": key_c2s.hex(),
        "key_s2c": key_s2c.hex(),
        "login_plaintext": login.hex(),
        "login_frame_wire": frame.hex(),
    }
    (ROOT / "fixtures" / "channel-vectors.json").write_text(json.dumps(out, indent=2) + "\n")


if __name__ == "__main__":
    main()
