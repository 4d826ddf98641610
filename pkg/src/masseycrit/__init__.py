"""Critical-point lower bounds for closed 1-forms from Massey-product survivors."""
