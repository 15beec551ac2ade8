"""
Types used in cavitybell
"""
from typing import Tuple

import numpy as np

# Dense complex matrix of dimension 2, 3 or 4
ComplexMatrix = np.ndarray

# Internal state of one atom
EXCITED = 'e'
GROUND = 'g'

# Internal state of the atom pair, first atom first
InternalLabel = Tuple[str, str]
