"""Cover-versus-stego histogram figure."""

from pathlib import Path
from typing import Optional, Union

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402

from stegovcs.analysis.report import histogram  # noqa: E402
from stegovcs.imaging.images import GrayImage  # noqa: E402


def plot_histograms(
    stego: GrayImage, path: Union[str, Path], cover: Optional[GrayImage] = None
) -> Path:
    """Write a bar chart of the stego histogram, next to the cover's when given."""
    panels = [("Cover image (binary)", cover)] if cover is not None else []
    panels.append(("Embedded image (grayscale)", stego))

    fig, axes = plt.subplots(1, len(panels), figsize=(6 * len(panels), 4), squeeze=False)
    for ax, (title, img) in zip(axes[0], panels):
        ax.bar(range(256), histogram(img).counts, width=1.0, color="black")
        ax.set_xlim(-1, 256)
        ax.set_title(title)
        ax.set_xlabel("Pixel value")
        ax.set_ylabel("Pixel count")
    fig.tight_layout()

    path = Path(path)
    fig.savefig(path)
    plt.close(fig)
    return path
