COMMAND_MAP = {
    "tp": {
        "service": "ThomPolynomialService",
        "help": "Thom polynomial of the Morin singularity A_k in a given relative codimension",
    },
    "verify-table1": {
        "service": "Table1Service",
        "help": "compare computed Thom polynomials with the golden published rows",
    },
    "scan": {
        "service": "ScanService",
        "help": "positivity and predecessor-ratio scan of the Thom series on a box",
    },
    "tp3": {
        "service": "Tp3Service",
        "help": "k = 3 Thom series against its factorized generating function",
    },
    "ggl": {
        "service": "GGLService",
        "help": "positivity certificate for the degree polynomial of a generic hypersurface",
    },
    "mdeg": {
        "service": "MdegService",
        "help": "multidegree of a monomial ideal under a torus weight assignment",
    },
    "oracle": {
        "service": "OracleService",
        "help": "fixed-point sum against iterated residue at random torus weights",
    },
    "residue": {
        "service": "ResidueService",
        "help": "iterated residue of a rational expression read from a JSON spec",
    },
}
