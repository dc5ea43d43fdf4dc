try:
    from ._mqrot import *  # noqa: F401,F403  (wheel layout)
except ImportError:
    from _mqrot import *  # noqa: F401,F403  (in-tree build layout)
