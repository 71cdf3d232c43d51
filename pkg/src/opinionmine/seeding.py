import zlib

import numpy as np


def fork_rng(seed: int, label: str) -> np.random.Generator:
    """Independent generator for one named consumer of the run seed.

    Streams are keyed on (seed, crc32(label)) so adding a consumer never
    shifts the draws of another.
    """
    return np.random.default_rng([int(seed), zlib.crc32(label.encode("utf-8"))])
