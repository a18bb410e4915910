"""Author: grouptree developers, Copyright 2026, MIT License"""


import multiprocessing as m


# gains closer than this are treated as equal during split selection
EPSILON = 1e-12


PROCESS_IS_INITIALIZED = False


def maybe_initialize_process():
    global PROCESS_IS_INITIALIZED
    if not PROCESS_IS_INITIALIZED:
        PROCESS_IS_INITIALIZED = True

        # on startup ensure all worker processes are started using the spawn method
        m.set_start_method('spawn', force=True)
