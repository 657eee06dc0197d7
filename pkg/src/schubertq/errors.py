"""Exception hierarchy shared by every module."""


class SchubertQError(ValueError):
    """Base class; ``code`` is the machine-readable tag used by the CLI."""

    code = "error"

    def __init__(self, message=""):
        super().__init__(message or self.code)


def _make(name, code):
    return type(name, (SchubertQError,), {"code": code, "__doc__": code})


InvalidMinorSize = _make("InvalidMinorSize", "invalid_minor_size")
AmbientMismatch = _make("AmbientMismatch", "ambient_mismatch")
ZeroPolynomial = _make("ZeroPolynomial", "zero_polynomial")
ParseError = _make("ParseError", "parse_error")
InvalidPartition = _make("InvalidPartition", "invalid_partition")
BoxMismatch = _make("BoxMismatch", "box_mismatch")
NoDepression = _make("NoDepression", "no_depression")
NotNormalized = _make("NotNormalized", "not_normalized")
InvalidDegree = _make("InvalidDegree", "invalid_degree")
InvalidFlagIndex = _make("InvalidFlagIndex", "invalid_flag_index")
DegenerateSpan = _make("DegenerateSpan", "degenerate_span")
NotOnGrassmannian = _make("NotOnGrassmannian", "not_on_grassmannian")
InvalidEmbedding = _make("InvalidEmbedding", "invalid_embedding")
NotInOpenCell = _make("NotInOpenCell", "not_in_open_cell")
UncertifiedDenominator = _make("UncertifiedDenominator", "uncertified_denominator")
PointNotOnVariety = _make("PointNotOnVariety", "point_not_on_variety")
DegreeTooSmall = _make("DegreeTooSmall", "degree_too_small")
ZeroConstant = _make("ZeroConstant", "zero_constant")
IndexOutOfRange = _make("IndexOutOfRange", "index_out_of_range")
