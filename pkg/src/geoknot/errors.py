"""Exception hierarchy shared by every geoknot module."""

from __future__ import annotations


class GeoKnotError(Exception):
    """Base class for domain errors; the CLI maps these to exit code 1."""

    reason = "error"

    def to_dict(self) -> dict:
        return {"error": self.reason, "message": str(self)}


class ZeroLengthSegment(GeoKnotError):
    reason = "ZeroLengthSegment"


class DegenerateContact(GeoKnotError):
    reason = "DegenerateContact"


class DegenerateConfiguration(GeoKnotError):
    reason = "DegenerateConfiguration"


class NonGeneric(GeoKnotError):
    reason = "NonGeneric"


class PolygonTooSmall(GeoKnotError):
    reason = "PolygonTooSmall"


class InvalidPolygon(GeoKnotError):
    reason = "InvalidPolygon"


class NotEmbedded(GeoKnotError):
    reason = "NotEmbedded"


class PerturbationFailed(GeoKnotError):
    reason = "PerturbationFailed"


class SamplingFailed(GeoKnotError):
    reason = "SamplingFailed"


class DegenerateAxis(GeoKnotError):
    reason = "DegenerateAxis"


class TooManyCrossings(GeoKnotError):
    reason = "TooManyCrossings"


class IndexOutOfRange(GeoKnotError, IndexError):
    reason = "IndexOutOfRange"


class NoEmptySector(NonGeneric):
    """The free vertices wind once or more around the axis, so no region code exists."""
