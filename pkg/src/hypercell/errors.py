"""Domain error types shared across the package.

Every error carries a stable ``code`` (the class name) so the CLI can emit
machine-readable JSON errors.
"""


class DomainError(Exception):
    """Base class for all domain-level failures."""

    @property
    def code(self) -> str:
        return type(self).__name__


class DegenerateTriangle(DomainError):
    """Triangle with collinear (zero-area) vertices."""


class DuplicateCell(DomainError):
    """Two cells with identical kind and vertex set."""


class ImproperIntersection(DomainError):
    """Two triangles overlap somewhere other than a shared face."""


class AmbientMismatch(DomainError):
    """Regions live in different ambient spaces (or complexes)."""


class IdenticalPoints(DomainError):
    """Two points expected to be distinct coincide."""


class FewerThanTwoRegions(DomainError):
    """A relation or family needs at least two regions."""


class MissingIntensity(DomainError):
    """Probe requires an intensity field the complex does not carry."""


class EtaOutOfRange(DomainError):
    """Dilation parameter outside (0, 1/(2n))."""


class NoTriangles(DomainError):
    """Operation needs a complex with at least one 2-cell."""


class UnknownVertex(DomainError):
    """Vertex id not present in the complex."""


class RingTooSmall(DomainError):
    """Spoke ring has fewer than three triangles; no cycle exists."""


class PointOutsideComplex(DomainError):
    """Point does not lie in any closed cell of the complex."""


class PointOnSkeleton(DomainError):
    """Point lies on an edge or vertex; callers must perturb."""


class Disconnected(DomainError):
    """No dual path joins the two triangles."""


class CollinearInput(DomainError):
    """All input points are collinear; no triangulation exists."""


class DuplicatePoints(DomainError):
    """Input points contain a (near-)duplicate pair."""


class UnsupportedFormat(DomainError):
    """Image file format not supported."""


class CorruptHeader(DomainError):
    """Image file truncated or malformed."""


class TooFewKeypoints(DomainError):
    """Fewer than three seed points; triangulation impossible."""


class CollinearKeypoints(DomainError):
    """All seed points collinear; triangulation impossible."""


class UnknownReference(DomainError):
    """Render layer references a structure that was not supplied."""


class CycleTooShort(DomainError):
    """A cycle needs at least three waypoints."""
