import hmac
from functools import wraps

from flask import current_app, jsonify, request


def require_api_key(f):
    """Checks X-API-Key against the configured key; open when no key is configured."""
    @wraps(f)
    def decorated_function(*args, **kwargs):
        expected = current_app.config.get('API_KEY')
        if not expected:
            return f(*args, **kwargs)
        api_key = request.headers.get('X-API-Key')
        if not api_key:
            return jsonify({'error': 'No API key provided'}), 401
        if not hmac.compare_digest(api_key.encode(), expected.encode()):
            return jsonify({'error': 'Invalid API key'}), 401
        return f(*args, **kwargs)
    return decorated_function
