"""Identity definitions; importing this package registers all of them."""

from . import laguerre  # noqa: F401
from . import charlier  # noqa: F401
from . import meixner  # noqa: F401
from . import bigq  # noqa: F401
from . import littleq  # noqa: F401
from . import sw  # noqa: F401
from . import relations  # noqa: F401
from . import generic  # noqa: F401
