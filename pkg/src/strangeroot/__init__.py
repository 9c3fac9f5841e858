"""Strange roots, Fagan's construction and Tchoukaillon solitaire."""

from .arith import RangeError
from .core import (
    AlistPair,
    AlistSequence,
    alist,
    alist_step,
    strange_root,
    w_recurrence,
    w_sequence,
)
from .fagan import FaganPair, FaganSequence, cf, fagan_sequence, from_fagan, to_fagan
from .tchoukaillon import (
    Board,
    IllegalMove,
    Loss,
    MoveVector,
    PlayTrace,
    fagan_property,
    move_vector,
    move_vector_by_play,
    move_vector_from_board,
    play_move,
    solve,
    t,
    t_by_scan,
    tchouk,
    tchouk_recursive,
)
from .correspondence import (
    alist_to_board,
    board_to_alist,
    board_to_alist_inferred,
    preimage_count,
    strange_root_census,
)
from .search import (
    XSequence,
    inverse_step,
    is_unique_root,
    root_preimages,
    scan_unique_roots,
    x_sequence,
)

__version__ = "0.1.0"
