"""Gray-level image and patch models."""

import numpy as np
from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from src.config.constants import (
    ABC_ACCEPTED,
    DEFAULT_NUM_PROJECTIONS,
    DICTIONARY_SIZE,
    LOCATION_DRAWS,
    PATCH_RADIUS,
    PATCHES_PER_CLUSTER,
    PIXEL_MAX,
    PROPOSAL_CAP_FACTOR,
    SEARCH_HALF_WIDTH,
)


class GrayImage(BaseModel):
    """M x N gray-level raster extended to Z² by periodicity."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    pixels: np.ndarray = Field(..., description="M x N array of values in [0, 255]")

    @field_validator("pixels", mode="before")
    @classmethod
    def _as_raster(cls, value: object) -> np.ndarray:
        pixels = np.asarray(value, dtype=np.float64)
        if pixels.ndim != 2 or pixels.shape[0] < 1 or pixels.shape[1] < 1:
            raise ValueError(f"pixels must be a non-empty 2-D array, got shape {pixels.shape}")
        if not np.all(np.isfinite(pixels)):
            raise ValueError("pixels must be finite")
        if pixels.min() < 0.0 or pixels.max() > PIXEL_MAX:
            raise ValueError("pixels must lie in [0, 255]")
        return pixels

    @property
    def height(self) -> int:
        """Number of rows M."""
        return int(self.pixels.shape[0])

    @property
    def width(self) -> int:
        """Number of columns N."""
        return int(self.pixels.shape[1])

    @property
    def shape(self) -> tuple[int, int]:
        """(M, N)."""
        return self.height, self.width

    def at(self, row: int, col: int) -> float:
        """Pixel value with periodic wrap-around."""
        return float(self.pixels[row % self.height, col % self.width])

    @classmethod
    def clamped(cls, pixels: np.ndarray) -> "GrayImage":
        """Build an image after clamping values to [0, 255]."""
        return cls(pixels=np.clip(np.asarray(pixels, dtype=np.float64), 0.0, PIXEL_MAX))


class Patch(BaseModel):
    """(2r+1) x (2r+1) window centred at a pixel."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    values: np.ndarray = Field(..., description="Square window of pixel values")
    center: tuple[int, int] = Field(..., description="Pixel position (row, col)")

    @field_validator("values", mode="before")
    @classmethod
    def _as_square(cls, value: object) -> np.ndarray:
        values = np.asarray(value, dtype=np.float64)
        if values.ndim != 2 or values.shape[0] != values.shape[1] or values.shape[0] % 2 == 0:
            raise ValueError(f"patch must be square with odd side, got shape {values.shape}")
        return values

    @property
    def radius(self) -> int:
        """Patch radius r."""
        return (self.values.shape[0] - 1) // 2

    def flatten(self) -> np.ndarray:
        """Row-major vector of length (2r+1)²."""
        return self.values.reshape(-1)


class PatchDictionary(BaseModel):
    """Sampled anchor positions D and their patches."""

    model_config = ConfigDict(arbitrary_types_allowed=True, frozen=True)

    positions: np.ndarray = Field(..., description="|D| x 2 (row, col), lexicographically sorted")
    patches: np.ndarray = Field(..., description="|D| x (2r+1)² flattened patches")
    radius: int = Field(..., ge=0, description="Patch radius r")
    seed: int | None = Field(default=None, description="Sampling seed")

    @model_validator(mode="after")
    def _check_positions(self) -> "PatchDictionary":
        if self.positions.ndim != 2 or self.positions.shape[1] != 2:
            raise ValueError("positions must be a |D| x 2 array")
        if len(self.positions) == 0:
            raise ValueError("dictionary must not be empty")
        if len(np.unique(self.positions, axis=0)) != len(self.positions):
            raise ValueError("dictionary positions must be distinct")
        if len(self.patches) != len(self.positions):
            raise ValueError("one patch per dictionary position is required")
        return self

    @property
    def size(self) -> int:
        """|D|."""
        return int(len(self.positions))


class DenoiseParams(BaseModel):
    """Hyper-parameters of NL-means and SW-ABC NL-means."""

    r: int = Field(default=PATCH_RADIUS, ge=0, description="Patch radius")
    search_window: int = Field(default=SEARCH_HALF_WIDTH, ge=0, description="Search half-width")
    dict_size: int = Field(default=DICTIONARY_SIZE, ge=1, description="|D|")
    T: int = Field(default=ABC_ACCEPTED, ge=1, description="Accepted ABC candidates per anchor")
    S: int = Field(default=LOCATION_DRAWS, ge=1, description="Cluster positions per anchor")
    m: int = Field(default=PATCHES_PER_CLUSTER, ge=1, description="Observed patches per anchor")
    epsilon: float | None = Field(default=None, gt=0.0, description="Tolerance, (2r+1)² if unset")
    sigma: float = Field(default=20.0, gt=0.0, description="Noise standard deviation")
    h: float | None = Field(default=None, gt=0.0, description="NL-means strength, sigma if unset")
    patch_average: bool = Field(
        default=False, description="Divide NL-means patch distances by the patch area"
    )
    num_projections: int = Field(default=DEFAULT_NUM_PROJECTIONS, ge=1, description="L")
    order_p: float = Field(default=2.0, ge=1.0, description="SW order used for acceptance")
    compare_power: bool = Field(
        default=False, description="Compare SW_p^p instead of SW_p against epsilon"
    )
    proposal_cap_factor: int = Field(
        default=PROPOSAL_CAP_FACTOR, ge=1, description="Proposals per anchor = factor x T"
    )
    seed: int = Field(default=0, ge=0, description="Seed for dictionary, projections and streams")

    @property
    def tolerance(self) -> float:
        """Acceptance threshold epsilon."""
        if self.epsilon is not None:
            return self.epsilon
        return float((2 * self.r + 1) ** 2)

    @property
    def strength(self) -> float:
        """NL-means filtering parameter h."""
        return self.h if self.h is not None else self.sigma

    @property
    def proposal_cap(self) -> int:
        """Maximum rejection proposals per dictionary anchor."""
        return self.proposal_cap_factor * self.T


class DenoiseReport(BaseModel):
    """Denoised image with run diagnostics."""

    image: GrayImage
    fallback_count: int = Field(default=0, ge=0, description="Anchors with zero acceptances")
    sw_evaluations: int = Field(default=0, ge=0, description="SW distances computed")
    skipped_anchors: int = Field(default=0, ge=0, description="Anchors with empty clusters")
