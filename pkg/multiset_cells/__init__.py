# Copyright the multiset-cells contributors.
#
# This program is Free Software; you can redistribute it and/or
# modify it under the terms of the GNU General Public License
# as published by the Free Software Foundation; either version 2
# of the License, or (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program; if not, write to the Free Software
# Foundation, Inc., 59 Temple Place - Suite 330, Boston, MA  02111-1307, USA.

"""Expose package-wide elements."""

__version__ = "1.0.0"

from .complexes import (  # noqa: E402
    FacePoset,
    GeometricRealization,
    dual_graph,
    face_poset_linear,
    face_poset_rect,
    lower_set,
    permutahedron,
    realize_biorthoscheme,
    realize_orthoscheme,
    tetra_graph,
    verify_dual_graph,
)
from .errors import (  # noqa: E402
    CompositionError,
    GeometryInputError,
    InputError,
    MultisetCellsError,
    MultisetError,
    PermutationError,
    ResourceGuardError,
    SizeMismatchError,
    VerificationFailed,
)
from .graphs import EdgeLabel, LabeledMultigraph, Side  # noqa: E402
from .linear import (  # noqa: E402
    LinearComposition,
    Multiset1D,
    comp1d,
    enumerate_linear,
    leq_linear,
    lower_covers_linear,
    merge_at,
    spine_linear,
    validate_linear,
)
from .rectangular import (  # noqa: E402
    Multiset2D,
    RectComposition,
    col_merge,
    comp2d,
    count_preimages,
    leq_rect,
    lower_covers_rect,
    maximal_elements,
    minimal_elements,
    pi_im,
    pi_re,
    row_merge,
    spine_rect,
    validate_rect,
)
from .symmetry import (  # noqa: E402
    Permutation,
    PermutationMatrix,
    act_left,
    act_right,
    cayley_graph,
    compose,
    overlay_lr,
)

__all__ = [
    "act_left",
    "act_right",
    "cayley_graph",
    "col_merge",
    "comp1d",
    "comp2d",
    "compose",
    "CompositionError",
    "count_preimages",
    "dual_graph",
    "EdgeLabel",
    "enumerate_linear",
    "face_poset_linear",
    "face_poset_rect",
    "FacePoset",
    "GeometricRealization",
    "GeometryInputError",
    "InputError",
    "LabeledMultigraph",
    "leq_linear",
    "leq_rect",
    "LinearComposition",
    "lower_covers_linear",
    "lower_covers_rect",
    "lower_set",
    "maximal_elements",
    "merge_at",
    "minimal_elements",
    "Multiset1D",
    "Multiset2D",
    "MultisetCellsError",
    "MultisetError",
    "overlay_lr",
    "Permutation",
    "PermutationError",
    "PermutationMatrix",
    "permutahedron",
    "pi_im",
    "pi_re",
    "realize_biorthoscheme",
    "realize_orthoscheme",
    "RectComposition",
    "ResourceGuardError",
    "row_merge",
    "Side",
    "SizeMismatchError",
    "spine_linear",
    "spine_rect",
    "tetra_graph",
    "validate_linear",
    "validate_rect",
    "VerificationFailed",
    "verify_dual_graph",
]
