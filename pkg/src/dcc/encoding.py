"""Gap + variable-byte encoding of clique covers with per-clique random access.

Each clique <v1 < v2 < ... > is stored as varbytes of <v1, v2-v1, ...>
(0-based ids). A varbyte holds 7 bits per byte, least significant chunk
first, with the high bit set on every byte except the last.

Container layout (little-endian):
    b"DCCE" | version (1 byte) | n (u64) | k (u64) | k+1 offsets (u64) | payload
"""
import os
import struct

from .cover import CliqueCover

MAGIC = b"DCCE"
VERSION = 1
_HEAD = struct.Struct("<4sBQQ")


class EncodingError(ValueError):
    pass


def varbyte_encode(value, out):
    if value < 0:
        raise EncodingError(f"cannot encode negative value {value}")
    while value >= 0x80:
        out.append((value & 0x7F) | 0x80)
        value >>= 7
    out.append(value)


def encode_clique(clique, out=None):
    if out is None:
        out = bytearray()
    prev = None
    for v in clique:
        if prev is None:
            varbyte_encode(v, out)
        else:
            if v <= prev:
                raise EncodingError(f"clique not strictly ascending at {prev}, {v}")
            varbyte_encode(v - prev, out)
        prev = v
    return out


class EncodedCover:
    __slots__ = ("n", "k", "offsets", "payload")

    def __init__(self, n, k, offsets, payload):
        self.n = n
        self.k = k
        self.offsets = tuple(offsets)
        self.payload = bytes(payload)

    def __len__(self):
        return self.k

    def __eq__(self, other):
        return (isinstance(other, EncodedCover)
                and (self.n, self.k, self.offsets, self.payload)
                == (other.n, other.k, other.offsets, other.payload))

    def __repr__(self):
        return f"EncodedCover(n={self.n}, k={self.k}, bytes={len(self.payload)})"

    def iter_cliques(self):
        """Decode cliques in order into one reused list; copy it to keep it."""
        buf = []
        for i in range(self.k):
            yield decode_clique(self, i, buf)

    def __iter__(self):
        for i in range(self.k):
            yield tuple(decode_clique(self, i))


def encode_cover(cover):
    payload = bytearray()
    offsets = [0]
    for c in cover.cliques:
        encode_clique(c, payload)
        offsets.append(len(payload))
    return EncodedCover(cover.n, len(cover.cliques), offsets, payload)


def decode_clique(enc, i, out=None):
    """Decode clique i into out (cleared first) and return it."""
    if not 0 <= i < enc.k:
        raise IndexError(f"clique index {i} outside 0..{enc.k - 1}")
    lo, hi = enc.offsets[i], enc.offsets[i + 1]
    if hi > len(enc.payload) or lo > hi:
        raise EncodingError(f"clique {i} range {lo}..{hi} exceeds payload of {len(enc.payload)} bytes")
    if out is None:
        out = []
    else:
        out.clear()
    data = enc.payload
    val = 0
    shift = 0
    prev = 0
    for j in range(lo, hi):
        b = data[j]
        val |= (b & 0x7F) << shift
        if b & 0x80:
            shift += 7
            continue
        prev = val if not out else prev + val
        out.append(prev)
        val = 0
        shift = 0
    if shift:
        raise EncodingError(f"clique {i} ends inside a varbyte (continuation bit on last byte)")
    return out


def decode_cover(enc):
    return CliqueCover(enc.n, [tuple(decode_clique(enc, i)) for i in range(enc.k)])


def to_bytes(enc):
    parts = [_HEAD.pack(MAGIC, VERSION, enc.n, enc.k),
             struct.pack(f"<{enc.k + 1}Q", *enc.offsets), enc.payload]
    return b"".join(parts)


def from_bytes(data):
    if len(data) < _HEAD.size:
        raise EncodingError("truncated header")
    magic, version, n, k = _HEAD.unpack_from(data)
    if magic != MAGIC:
        raise EncodingError(f"bad magic {magic!r}")
    if version != VERSION:
        raise EncodingError(f"unsupported version {version}")
    off_end = _HEAD.size + 8 * (k + 1)
    if len(data) < off_end:
        raise EncodingError("truncated offset table")
    offsets = struct.unpack_from(f"<{k + 1}Q", data, _HEAD.size)
    if offsets[0] != 0 or any(offsets[i] > offsets[i + 1] for i in range(k)):
        raise EncodingError("offsets are not monotone from 0")
    payload = data[off_end:]
    if len(payload) != offsets[-1]:
        raise EncodingError(f"payload has {len(payload)} bytes, offsets expect {offsets[-1]}")
    return EncodedCover(n, k, offsets, payload)


def write_encoded(enc, sink):
    data = to_bytes(enc)
    if isinstance(sink, (str, os.PathLike)):
        with open(sink, "wb") as fh:
            fh.write(data)
    else:
        sink.write(data)


def read_encoded(source):
    if isinstance(source, (str, os.PathLike)):
        with open(source, "rb") as fh:
            return from_bytes(fh.read())
    return from_bytes(source.read())


def is_encoded_file(path):
    with open(path, "rb") as fh:
        return fh.read(4) == MAGIC
