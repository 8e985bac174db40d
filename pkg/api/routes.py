import logging

from flask import jsonify, request

from cli import (cmd_adams, cmd_alpha, cmd_closure, cmd_lr, cmd_pm, cmd_psi_chords, cmd_q, cmd_qint,
                 cmd_theta, cmd_torus, cmd_verify, solve_pattern_data)
from config import Config
from errors import ParseError, SkeinError
from . import api, limiter
from .auth import require_api_key

# Configure logging
logger = logging.getLogger(__name__)


def _arg(name, type=str, required=True):
    value = request.args.get(name, type=type)
    if value is None and required:
        raise ParseError(f"Missing or malformed parameter {name!r}")
    return value


def _respond(name, handler, **params):
    try:
        result = handler(**params)
        return jsonify({'text': result.text, 'result': result.payload})
    except ParseError as e:
        logger.error(f"Parse error in {name}: {str(e)}")
        return jsonify({'error': str(e), 'position': e.position}), 400
    except (SkeinError, ValueError) as e:
        logger.error(f"Error in {name}: {str(e)}")
        return jsonify({'error': str(e)}), 422
    except Exception as e:
        logger.error(f"Error in {name}: {str(e)}")
        return jsonify({'error': str(e)}), 500


def _with_params(name, handler, build):
    try:
        params = build()
    except ParseError as e:
        return jsonify({'error': str(e)}), 400
    return _respond(name, handler, **params)


@api.route('/qint/<int:i>', methods=['GET'])
@require_api_key
def get_qint(i):
    return _respond('get_qint', cmd_qint, i=i)


@api.route('/alpha', methods=['GET'])
@require_api_key
def get_alpha():
    return _with_params('get_alpha', cmd_alpha, lambda: {'partition': _arg('partition')})


@api.route('/lr', methods=['GET'])
@require_api_key
def get_lr():
    return _with_params('get_lr', cmd_lr, lambda: {'first': _arg('first'), 'second': _arg('second')})


@api.route('/adams/<int:m>', methods=['GET'])
@require_api_key
def get_adams(m):
    return _respond('get_adams', cmd_adams, m=m, as_diagrams=request.args.get('as') == 'diagrams')


@api.route('/theta', methods=['POST'])
@require_api_key
def post_theta():
    data = request.get_json(silent=True) or {}
    if not data.get('cpoly'):
        return jsonify({'error': 'Field cpoly is required'}), 400
    return _respond('post_theta', cmd_theta, cpoly=data['cpoly'])


@api.route('/q', methods=['GET'])
@require_api_key
def get_q():
    return _with_params('get_q', cmd_q, lambda: {'partition': _arg('partition')})


@api.route('/closure', methods=['GET'])
@require_api_key
def get_closure():
    return _with_params('get_closure', cmd_closure,
                        lambda: {'word': _arg('word'), 'strands': _arg('strands', int, required=False)})


@api.route('/pm/<int:m>', methods=['GET'])
@require_api_key
def get_pm(m):
    return _respond('get_pm', cmd_pm, m=m)


@api.route('/torus', methods=['GET'])
@require_api_key
def get_torus():
    return _with_params('get_torus', cmd_torus, lambda: {
        'm': _arg('m', int),
        'p': _arg('p', int),
        'sl': _arg('sl', int, required=False),
        'h_order': _arg('h_order', int, required=False),
        'normalize': request.args.get('normalize', 'false').lower() in ('1', 'true', 'yes'),
    })


@api.route('/solve-pattern', methods=['POST'])
@require_api_key
def post_solve_pattern():
    data = request.get_json(silent=True)
    if not isinstance(data, dict):
        return jsonify({'error': 'A JSON object with target and patterns is required'}), 400
    return _respond('post_solve_pattern', solve_pattern_data, data=data)


@api.route('/psi-chords', methods=['GET'])
@require_api_key
def get_psi_chords():
    return _with_params('get_psi_chords', cmd_psi_chords,
                        lambda: {'matching': _arg('matching'), 'm': _arg('m', int)})


@api.route('/verify', methods=['GET'])
@require_api_key
@limiter.limit(Config.VERIFY_RATE_LIMIT)
def get_verify():
    try:
        params = {'suite': request.args.get('suite', 'all'), 'max_size': _arg('max', int, required=False)}
        result = cmd_verify(**params)
        return jsonify({'passed': result.exit_code == 0, 'lines': result.text.splitlines(),
                        'result': result.payload})
    except ParseError as e:
        return jsonify({'error': str(e)}), 400
    except (SkeinError, ValueError) as e:
        logger.error(f"Error in get_verify: {str(e)}")
        return jsonify({'error': str(e)}), 422
    except Exception as e:
        logger.error(f"Error in get_verify: {str(e)}")
        return jsonify({'error': str(e)}), 500
