"""JSON Schemas for the CLI's machine-readable output."""

_num = {"type": "number"}
_complex = {"type": "array", "items": _num, "minItems": 2, "maxItems": 2}
_matrix = {"type": "array", "minItems": 3, "maxItems": 3,
           "items": {"type": "array", "minItems": 3, "maxItems": 3, "items": _complex}}

BLOCH = {
    "type": "object",
    "required": ["bloch", "pure", "checks"],
    "properties": {
        "bloch": {"type": "array", "items": _num, "minItems": 8, "maxItems": 8},
        "pure": {"type": "boolean"},
        "checks": {
            "type": "object",
            "required": ["norm", "n_dot_n_minus_1", "star_residual", "opening_angles"],
            "properties": {
                "norm": _num,
                "n_dot_n_minus_1": _num,
                "star_residual": _num,
                "opening_angles": {"type": ["object", "null"], "additionalProperties": _num},
            },
        },
    },
}

_eigenpair = {
    "type": "object",
    "required": ["eigenvalue", "phase", "eigenvector"],
    "properties": {
        "eigenvalue": _complex,
        "phase": _num,
        "eigenvector": {"type": "array", "items": _complex, "minItems": 3, "maxItems": 3},
    },
}

PHASE_OPS = {
    "type": "object",
    "required": ["operators", "noncommutativity"],
    "properties": {
        "operators": {
            "type": "object",
            "additionalProperties": {
                "type": "object",
                "required": ["E", "R", "eigensystem", "polar_residual", "unitarity_residual"],
                "properties": {
                    "E": _matrix,
                    "R": _matrix,
                    "eigensystem": {"type": "array", "items": _eigenpair, "minItems": 3, "maxItems": 3},
                    "polar_residual": _num,
                    "unitarity_residual": _num,
                },
            },
        },
        "noncommutativity": {
            "type": "object",
            "required": ["E12E23_minus_E13", "commutators"],
            "properties": {"E12E23_minus_E13": _num, "commutators": {"type": "object", "additionalProperties": _num}},
        },
    },
}

VERIFY = {
    "type": "object",
    "required": ["passed", "seed", "checks"],
    "properties": {
        "passed": {"type": "boolean"},
        "seed": {"type": "integer"},
        "checks": {
            "type": "array",
            "items": {
                "type": "object",
                "required": ["suite", "name", "relation", "value", "bound", "mode", "passed"],
                "properties": {
                    "suite": {"type": "string"},
                    "name": {"type": "string"},
                    "relation": {"type": "string"},
                    "value": _num,
                    "bound": _num,
                    "mode": {"enum": ["max", "min", "gt"]},
                    "passed": {"type": "boolean"},
                },
            },
        },
    },
}

RECONSTRUCT = {
    "type": "object",
    "required": ["rho12", "rho23", "rho13", "condition_number"],
    "properties": {"rho12": _complex, "rho23": _complex, "rho13": _complex, "condition_number": _num},
}

_means = {
    "type": "object",
    "required": ["n1", "n2", "n3", "s32", "s21", "s31"],
    "properties": {"n1": _num, "n2": _num, "n3": _num, "s32": _complex, "s21": _complex, "s31": _complex},
}

COHERENT = {
    "type": "object",
    "required": ["N", "C", "mean_values"],
    "properties": {"N": {"type": "integer", "minimum": 1}, "C": _num, "mean_values": _means, "overlap": _complex},
}

RADIAL_REPORT = {
    "type": "object",
    "required": ["diagonal", "offdiagonal_moduli", "offdiagonal_phases", "ratio", "target_ratio"],
    "properties": {
        "diagonal": {"type": "array", "items": _num, "minItems": 3, "maxItems": 3},
        "offdiagonal_moduli": {"type": "object", "additionalProperties": _num},
        "offdiagonal_phases": {"type": "object", "additionalProperties": _num},
        "ratio": _num,
        "target_ratio": _num,
    },
}

QUADRATURE = {
    "type": "object",
    "properties": {"radial_nodes": {"type": "integer", "minimum": 2}, "phase_nodes": {"type": "integer", "minimum": 2}},
    "additionalProperties": False,
}
