import os


class Config:
    LOG_LEVEL = os.environ.get('SKEIN_LOG_LEVEL', 'INFO').upper()

    # S_n enumeration cap for a_n, b_n and everything built on them
    MAX_STRANDS = int(os.environ.get('SKEIN_MAX_STRANDS', 8))

    # e_lambda warns when it grows past this many basis terms (8!)
    WARN_TERMS = int(os.environ.get('SKEIN_WARN_TERMS', 40320))

    # Caps on request-sized work outside S_n
    MAX_EXPONENT = int(os.environ.get('SKEIN_MAX_EXPONENT', 256))
    MAX_QINT = int(os.environ.get('SKEIN_MAX_QINT', 1000))
    MAX_DEGREE = int(os.environ.get('SKEIN_MAX_DEGREE', 24))
    MAX_CHORD_LIFTS = int(os.environ.get('SKEIN_MAX_CHORD_LIFTS', 10 ** 6))

    API_KEY = os.environ.get('SKEIN_API_KEY')
    RATE_LIMITS = [
        limit.strip()
        for limit in os.environ.get('SKEIN_RATE_LIMITS', '200 per day;50 per hour').split(';')
        if limit.strip()
    ]
    VERIFY_RATE_LIMIT = os.environ.get('SKEIN_VERIFY_RATE_LIMIT', '5 per minute')

    PORT = int(os.environ.get('PORT', 5000))
