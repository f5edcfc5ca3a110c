# second-eigenvalue estimation and expansion classification
