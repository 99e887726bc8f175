"""Histogram, band-gap and guess-probability reports."""

from fractions import Fraction
from typing import Dict, Iterable, List, Optional

import numpy as np
from pydantic import BaseModel, Field

from stegovcs.bands import BLACK_MAX, BLACK_MIN, WHITE_MAX, WHITE_MIN, first_out_of_band
from stegovcs.errors import BandViolation
from stegovcs.imaging.images import GrayImage
from stegovcs.scheme.shares import PatternChoice, split_pixel


class HistogramReport(BaseModel):
    """Per-intensity pixel counts plus band tallies."""

    counts: List[int] = Field(description="256 bins; bin v counts pixels equal to v")
    in_black_band: int = Field(description="pixels in [0, 12]")
    in_white_band: int = Field(description="pixels in [243, 255]")
    out_of_band: int = Field(description="pixels in the gap [13, 242]")

    @property
    def total(self) -> int:
        return sum(self.counts)

    def nonzero_bins(self) -> List[int]:
        return [v for v, c in enumerate(self.counts) if c]


class BandGapReport(BaseModel):
    highest_black: Optional[int] = Field(description="largest black-band value present")
    lowest_white: Optional[int] = Field(description="smallest white-band value present")
    gap_start: int
    gap_end: int

    @property
    def width(self) -> int:
        return self.gap_end - self.gap_start + 1


class ComparisonRow(BaseModel):
    scheme: str
    numerator: int
    denominator: int

    @property
    def probability(self) -> Fraction:
        return Fraction(self.numerator, self.denominator)

    @property
    def label(self) -> str:
        return f"{self.numerator}/{self.denominator}"


def histogram(img: GrayImage) -> HistogramReport:
    counts = np.bincount(img.flat(), minlength=256)
    return HistogramReport(
        counts=counts.tolist(),
        in_black_band=int(counts[BLACK_MIN : BLACK_MAX + 1].sum()),
        in_white_band=int(counts[WHITE_MIN : WHITE_MAX + 1].sum()),
        out_of_band=int(counts[BLACK_MAX + 1 : WHITE_MIN].sum()),
    )


def band_gap_report(img: GrayImage) -> BandGapReport:
    """Unused interval between the darkest white and the brightest black value present."""
    index = first_out_of_band(img.pixels)
    if index is not None:
        raise BandViolation("pixel lies in the band gap", index=index, value=int(img.flat()[index]))
    flat = img.flat()
    black = flat[flat <= BLACK_MAX]
    white = flat[flat >= WHITE_MIN]
    highest_black = int(black.max()) if black.size else None
    lowest_white = int(white.min()) if white.size else None
    return BandGapReport(
        highest_black=highest_black,
        lowest_white=lowest_white,
        gap_start=BLACK_MIN if highest_black is None else highest_black + 1,
        gap_end=WHITE_MAX if lowest_white is None else lowest_white - 1,
    )


def count_band_encodings() -> Dict[str, int]:
    """Distinct (value half 1, value half 2) encodings per band and pattern."""
    counts = {}
    for band, values in (
        ("black", range(BLACK_MIN, BLACK_MAX + 1)),
        ("white", range(WHITE_MIN, WHITE_MAX + 1)),
    ):
        noise = 255 if band == "black" else 0
        for pattern in PatternChoice:
            encodings = set()
            for x in values:
                pair1, pair2 = split_pixel(x, pattern)
                encodings.add(
                    (next(v for v in pair1 if v != noise), next(v for v in pair2 if v != noise))
                )
            counts[f"{band}/{pattern.value}"] = len(encodings)
    return counts


BASELINE_SCHEMES = (
    "Naor-Shamir (2,2) VCS",
    "Neural-network VCS (Yue-Chiang)",
    "Jena-Jena VCS",
)


def guess_probability() -> List[ComparisonRow]:
    """Single-guess probability per scheme; ours is 1 over the band cardinality."""
    cardinalities = set(count_band_encodings().values())
    if len(cardinalities) != 1:
        raise AssertionError(f"bands encode unevenly: {sorted(cardinalities)}")
    rows = [ComparisonRow(scheme=name, numerator=1, denominator=2) for name in BASELINE_SCHEMES]
    rows.append(
        ComparisonRow(
            scheme="Band-gap grayscale (2,2) VCS", numerator=1, denominator=cardinalities.pop()
        )
    )
    return rows


def histogram_csv(report: HistogramReport) -> str:
    return "value,count\n" + "".join(f"{v},{c}\n" for v, c in enumerate(report.counts))


def render_key_values(
    hist: HistogramReport,
    gap: Optional[BandGapReport] = None,
    table: Iterable[ComparisonRow] = (),
) -> str:
    lines = [
        f"pixels={hist.total}",
        f"in_black_band={hist.in_black_band}",
        f"in_white_band={hist.in_white_band}",
        f"out_of_band={hist.out_of_band}",
        "nonzero_bins=" + ",".join(map(str, hist.nonzero_bins())),
    ]
    if gap is not None:
        lines += [
            f"highest_black={'' if gap.highest_black is None else gap.highest_black}",
            f"lowest_white={'' if gap.lowest_white is None else gap.lowest_white}",
            f"gap_start={gap.gap_start}",
            f"gap_end={gap.gap_end}",
            f"gap_width={gap.width}",
        ]
    for n, row in enumerate(table, start=1):
        lines.append(f"scheme.{n}={row.scheme}")
        lines.append(f"probability.{n}={row.label}")
    return "\n".join(lines) + "\n"


def render_text(
    hist: HistogramReport,
    gap: Optional[BandGapReport] = None,
    table: Iterable[ComparisonRow] = (),
) -> str:
    lines = [
        f"Pixels:          {hist.total}",
        f"Black band 0-12: {hist.in_black_band}",
        f"White band 243+: {hist.in_white_band}",
        f"Band gap 13-242: {hist.out_of_band}",
    ]
    if gap is not None:
        black = "absent" if gap.highest_black is None else gap.highest_black
        white = "absent" if gap.lowest_white is None else gap.lowest_white
        lines += [
            "",
            f"Highest black value: {black}",
            f"Lowest white value:  {white}",
            f"Gap: [{gap.gap_start}, {gap.gap_end}] (width {gap.width})",
        ]
    rows = list(table)
    if rows:
        lines += ["", f"{'Scheme':<36}Probability of occurrence"]
        lines += [f"{row.scheme:<36}{row.label}" for row in rows]
    return "\n".join(lines) + "\n"
