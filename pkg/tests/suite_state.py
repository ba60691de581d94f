"""State shared between the conftest hooks and the acceptance module."""

import time

SESSION_START = time.perf_counter()
CERTIFICATES: list = []     # (tensor, KernelTriple) pairs produced by the library
ACCEPTANCE: dict = {}       # criterion number -> (passed, detail)
