"""The FLCC protocol: parameters, thresholds, jobs, encoding and master decoding."""
