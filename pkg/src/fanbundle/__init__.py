"""Fan-bundle planar drawings: validation, recognition, generators."""
