"""Filter algebra on finite semigroups and finite-sums combinatorics on windows of N."""
