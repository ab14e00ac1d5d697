"""Named group fixtures for the worked examples."""

NAMED_FIXTURES: dict[str, dict] = {
    "example1": {"kind": "sym", "n": 4},
    "example2": {"kind": "affine", "components": [[5, 2]], "d": 3, "e": 2},
    "example3": {"kind": "affine", "components": [[2, 2], [5, 2]], "d": 3, "e": 2},
    "example4": {"kind": "affine", "components": [[2, 3]], "d": 7, "e": 3},
    "example5": {"kind": "affine", "components": [[2, 10]], "d": 11, "e": 10},
    "example6": {"kind": "affine", "components": [[2, 15]], "d": 151, "e": 15},
    "a4": {"kind": "perm", "degree": 4, "generators": [[[0, 1, 2]], [[0, 1], [2, 3]]]},
    "s3": {"kind": "sym", "n": 3},
}
