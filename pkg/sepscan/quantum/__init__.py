"""Dense numeric kernels over amplitude vectors and density matrices."""
