#!/usr/bin/env python3
# Copyright 2026 The savid Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Generates tests/oracle_vectors.hpp from independent implementations.

Field values use Python integers, points use py_ecc, hashes use hashlib,
signatures and the keystream use the `cryptography` package.

    pip install py_ecc cryptography
    python3 tests/oracles/gen_vectors.py > tests/oracle_vectors.hpp
"""

import hashlib
import struct

from cryptography.hazmat.primitives.asymmetric.ed25519 import Ed25519PrivateKey
from cryptography.hazmat.primitives.ciphers import Cipher, algorithms
from py_ecc.bls.point_compression import compress_G1, compress_G2
from py_ecc.optimized_bls12_381 import G1, G2, multiply

P = 0x73EDA753299D7D483339D80809A1D80553BDA402FFFE5BFEFFFFFFFF00000001


def le(x):
    return (x % P).to_bytes(32, "little").hex()


def g1(s):
    return compress_G1(multiply(G1, s % P)).to_bytes(48, "big").hex()


def g2(s):
    z1, z2 = compress_G2(multiply(G2, s % P))
    return (z1.to_bytes(48, "big") + z2.to_bytes(48, "big")).hex()


def inv(x):
    return pow(x, P - 2, P)


def root_of_unity(log_order):
    return pow(pow(7, (P - 1) >> 32, P), 1 << (32 - log_order), P)


def trapdoor(seed, n):
    attempt = 0
    while True:
        wide = hashlib.sha512(b"semi-avid-pr/v1/dev-setup" + struct.pack(">Q", attempt) + seed).digest()
        r = int.from_bytes(wide, "little") % P
        if r != 0 and pow(r, n, P) != 1:
            return r
        attempt += 1


def lagrange_at(x, n):
    w = root_of_unity(n.bit_length() - 1)
    zn = (pow(x, n, P) - 1) % P
    out = []
    for i in range(n):
        wi = pow(w, i, P)
        out.append(wi * zn * inv(n * (x - wi)) % P)
    return out


def keystream(seed, nbytes):
    key = hashlib.sha256(seed).digest()
    out = b""
    block = 0
    while len(out) < nbytes:
        nonce = struct.pack("<I", 0) + struct.pack("<Q", block) + b"\0" * 4
        enc = Cipher(algorithms.ChaCha20(key, nonce), mode=None).encryptor()
        out += enc.update(b"\0" * 1024)
        block += 1
    return out[:nbytes]


def emit(name, value):
    print(f'inline constexpr std::string_view {name} = "{value}";')


def main():
    print("// Generated by tests/oracles/gen_vectors.py. Do not edit.")
    print("#pragma once")
    print("#include <string_view>")
    print("namespace oracle {")

    a = int.from_bytes(hashlib.sha256(b"a").digest(), "big") % P
    b = int.from_bytes(hashlib.sha256(b"b").digest(), "big") % P
    wide = hashlib.sha512(b"wide").digest()
    emit("kFieldA", le(a))
    emit("kFieldB", le(b))
    emit("kFieldSum", le(a + b))
    emit("kFieldDiff", le(a - b))
    emit("kFieldProd", le(a * b))
    emit("kFieldInvA", le(inv(a)))
    emit("kFieldAPow12345", le(pow(a, 12345, P)))
    emit("kFieldWideInput", wide.hex())
    emit("kFieldWideReduced", le(int.from_bytes(wide, "little")))
    emit("kRoot32", le(root_of_unity(32)))
    emit("kRoot3", le(root_of_unity(3)))
    emit("kModulusLe", P.to_bytes(32, "little").hex())

    emit("kG1Gen", g1(1))
    emit("kG1Times5", g1(5))
    emit("kG2Gen", g2(1))

    # Development setup for max_len = 4 with seed "oracle-seed".
    seed = b"oracle-seed"
    n = 4
    r = trapdoor(seed, n)
    emit("kSetupSeed", seed.decode())
    emit("kSetupVk", g2(r))
    emit("kSetupPower1", g1(r))
    emit("kSetupPower3", g1(pow(r, 3, P)))
    lag = lagrange_at(r, n)
    emit("kSetupLagrange2", g1(lag[2]))

    v = [5, 7, 11]
    vr = sum(x * l for x, l in zip(v, lag)) % P
    emit("kCommit5_7_11", g1(vr))
    # Witness for position 2 (0-based 1): (V(r) - v[1]) / (r - w^1).
    w = root_of_unity(2)
    emit("kWitness5_7_11_at2", g1((vr - v[1]) * inv(r - w)))

    # Block commitment of (commit(v), g1).
    h = bytes.fromhex(g1(vr)) + bytes.fromhex(g1(1))
    emit("kHashCommitments", hashlib.sha256(b"semi-avid-pr/v1/commit" + h).hexdigest())

    # Node key 3 of deployment seed "deploy" and its receipt over C = 0x11^32.
    node_seed = hashlib.sha256(b"semi-avid-pr/v1/node-key" + struct.pack(">Q", 3) + b"deploy").digest()
    sk = Ed25519PrivateKey.from_private_bytes(node_seed)
    from cryptography.hazmat.primitives import serialization

    pk = sk.public_key().public_bytes(serialization.Encoding.Raw, serialization.PublicFormat.Raw)
    emit("kNode3PublicKey", pk.hex())
    emit("kNode3Receipt", sk.sign(b"semi-avid-pr/v1/stored" + b"\x11" * 32).hex())

    emit("kKeystreamSeed", "keystream")
    emit("kKeystream1100", keystream(b"keystream", 1100).hex())

    print("}  // namespace oracle")


if __name__ == "__main__":
    main()
