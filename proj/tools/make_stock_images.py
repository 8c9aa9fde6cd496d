"""Writes the 100x100 test images in data/images from scikit-image samples."""
import pathlib

import numpy as np
import skimage.data
from PIL import Image

OUT = pathlib.Path(__file__).resolve().parent.parent / "data" / "images"
NAMES = ["astronaut", "coffee", "chelsea", "rocket"]


def square_crop(a):
    h, w = a.shape[:2]
    s = min(h, w)
    top, left = (h - s) // 2, (w - s) // 2
    return a[top:top + s, left:left + s]


def main():
    OUT.mkdir(parents=True, exist_ok=True)
    for name in NAMES:
        img = Image.fromarray(np.ascontiguousarray(square_crop(getattr(skimage.data, name)())))
        img.resize((100, 100), Image.LANCZOS).convert("RGB").save(OUT / f"{name}.png")


if __name__ == "__main__":
    main()
