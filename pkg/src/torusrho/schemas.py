"""JSON Schemas of the CLI's JSON output, one per subcommand.

Exact rationals are strings ``"num/den"``; complex numbers are objects
``{"re": float, "im": float}`` written with round-trip float repr.
"""

RATIONAL = {"type": "string", "pattern": r"^-?\d+/\d+$"}
COMPLEX = {
    "type": "object",
    "properties": {"re": {"type": "number"}, "im": {"type": "number"}},
    "required": ["re", "im"],
    "additionalProperties": False,
}
INTERVALS = {
    "type": "array",
    "minItems": 1,
    "items": {
        "type": "object",
        "properties": {"x_start": RATIONAL, "x_end": RATIONAL, "value": {"type": "integer"}},
        "required": ["x_start", "x_end", "value"],
        "additionalProperties": False,
    },
}


def _obj(props: dict, required=None) -> dict:
    return {
        "type": "object",
        "properties": props,
        "required": list(props) if required is None else required,
        "additionalProperties": False,
    }


SIGNATURE = _obj({"knot": {"type": "string"}, "intervals": INTERVALS, "integral": RATIONAL})
SIGNATURE_AT = _obj({"knot": {"type": "string"}, "x": RATIONAL, "value": RATIONAL,
                     "jump": {"type": "boolean"}})
RHO = _obj({"knot": {"type": "string"}, "rho": RATIONAL,
            "method": {"enum": ["closed", "integral"]}})
FOURIER_BETA = _obj({"triple": {"type": "string"}, "beta": COMPLEX, "closed": COMPLEX,
                     "numeric": COMPLEX})
FOURIER_T = _obj({"triple": {"type": "string"}, "t": COMPLEX, "pole": {"type": "boolean"},
                  "n": {"anyOf": [COMPLEX, {"type": "null"}]}, "residue": COMPLEX})
COMPARE = _obj({
    "left": {"type": "string"},
    "right": {"type": "string"},
    "condition_a": {"type": "boolean"},
    "condition_b": {"type": "boolean"},
    "max_residue": {"type": "number", "minimum": 0},
    "pointwise_confirmed": {"type": "boolean"},
    "verdict": {"type": "boolean"},
    "period": {"type": "integer", "minimum": 1},
    "residues": {
        "type": "array",
        "items": _obj({"t0_over_pi": {"type": "integer"},
                       "magnitude": {"type": "number", "minimum": 0}}),
    },
})
ALGEBRAIC = _obj({
    "newton": {"type": "string"},
    "knot": {"type": "string"},
    "a": {"type": "array", "items": {"type": "integer"}},
    "kd_squared": {"type": "integer"},
    "h_squared": RATIONAL,
    "rho": RATIONAL,
    "delta": RATIONAL,
    "bound": RATIONAL,
    "within_bound": {"type": "boolean"},
    "sharp_bound": RATIONAL,
    "within_sharp_bound": {"type": "boolean"},
})
LINK_DD = _obj({"d": {"type": "integer", "minimum": 2}, "intervals": INTERVALS,
                "integral": RATIONAL, "h_squared": {"type": "integer"},
                "delta": RATIONAL, "within_bound": {"type": "boolean"}})
ORACLE_CHECK = _obj({
    "seed": {"type": "integer"},
    "all_pass": {"type": "boolean"},
    "rows": {
        "type": "array",
        "items": _obj({"p": {"type": "integer"}, "q": {"type": "integer"},
                       "size": {"type": "integer"}, "checked": {"type": "integer"},
                       "mismatches": {"type": "integer"},
                       "indeterminate": {"type": "integer"},
                       "status": {"enum": ["pass", "fail"]}}),
    },
})

CSV_STEP_FUNCTION_HEADER = ["x_start", "x_end", "value"]
CSV_PLOT_HEADER = ["x", "x_exact", "value"]
