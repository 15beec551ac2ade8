"""
cavitybell
^^^^^^^^^^

Non-local correlations of two atoms that exchange a photon through one cavity
mode, with the atomic translational dynamics kept quantum.

"""
__license__ = 'MIT'
__version__ = '1.0.0'
