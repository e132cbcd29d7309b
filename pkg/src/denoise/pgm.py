"""Binary PGM (P5, 8-bit) reader and writer."""

from pathlib import Path

import numpy as np
from loguru import logger

from src.config.constants import PIXEL_MAX
from src.errors import PgmParseError
from src.models.image import GrayImage

_WHITESPACE = b" \t\n\r\v\f"
_COMMENT = ord("#")
_MAXVAL = 255


def _next_token(data: bytes, pos: int) -> tuple[bytes, int]:
    """Return the next header token and the offset just past it, skipping comments."""
    while pos < len(data):
        if data[pos] == _COMMENT:
            end = data.find(b"\n", pos)
            pos = len(data) if end < 0 else end + 1
        elif data[pos] in _WHITESPACE:
            pos += 1
        else:
            break
    start = pos
    while pos < len(data) and data[pos] not in _WHITESPACE and data[pos] != _COMMENT:
        pos += 1
    if start == pos:
        raise PgmParseError("unexpected end of header", start)
    return data[start:pos], pos


def _header_int(data: bytes, pos: int, name: str) -> tuple[int, int]:
    token, end = _next_token(data, pos)
    if not token.isdigit():
        raise PgmParseError(f"{name} is not a decimal integer: {token!r}", end - len(token))
    return int(token), end


def parse_pgm(data: bytes) -> GrayImage:
    """
    Decode a P5 byte string with maxval 255.

    Raises:
        PgmParseError: bad magic, malformed header, unsupported maxval or short payload
    """
    if data[:2] != b"P5":
        raise PgmParseError(f"expected magic b'P5', found {data[:2]!r}", 0)
    if len(data) < 3 or data[2] not in _WHITESPACE:
        raise PgmParseError("missing whitespace after magic P5", 2)
    pos = 2
    width, pos = _header_int(data, pos, "width")
    height, pos = _header_int(data, pos, "height")
    if width < 1 or height < 1:
        raise PgmParseError(f"image size must be positive, got {width}x{height}", pos)
    header_end = pos
    maxval, pos = _header_int(data, pos, "maxval")
    if maxval != _MAXVAL:
        raise PgmParseError(f"only maxval 255 is supported, got {maxval}", header_end)
    if pos >= len(data) or data[pos] not in _WHITESPACE:
        raise PgmParseError("missing whitespace after maxval", pos)
    pos += 1

    size = width * height
    payload = data[pos : pos + size]
    if len(payload) < size:
        raise PgmParseError(
            f"truncated payload: expected {size} bytes, found {len(payload)}", pos + len(payload)
        )
    pixels = np.frombuffer(payload, dtype=np.uint8).reshape(height, width)
    return GrayImage(pixels=pixels.astype(np.float64))


def encode_pgm(img: GrayImage) -> bytes:
    """Encode an image as P5 after rounding and clamping to [0, 255]."""
    pixels = np.clip(np.rint(img.pixels), 0.0, PIXEL_MAX).astype(np.uint8)
    header = f"P5\n{img.width} {img.height}\n{_MAXVAL}\n".encode("ascii")
    return header + pixels.tobytes()


def pgm_read(path: str | Path) -> GrayImage:
    """Read a binary PGM file."""
    img = parse_pgm(Path(path).read_bytes())
    logger.debug(f"Read {img.height}x{img.width} PGM from {path}")
    return img


def pgm_write(img: GrayImage, path: str | Path) -> None:
    """Write a binary PGM file, creating parent directories."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_bytes(encode_pgm(img))
    logger.debug(f"Wrote {img.height}x{img.width} PGM to {path}")
