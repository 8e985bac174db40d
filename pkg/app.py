import logging

from flask import Flask, jsonify

from config import Config

# Configure logging
logging.basicConfig(
    level=getattr(logging, Config.LOG_LEVEL, logging.INFO),
    format='%(asctime)s - %(name)s - %(levelname)s - %(message)s')
logger = logging.getLogger(__name__)

# Create Flask app
app = Flask(__name__)
app.config['API_KEY'] = Config.API_KEY
app.config['MAX_STRANDS'] = Config.MAX_STRANDS

from api import api, limiter  # noqa: E402

limiter.init_app(app)
app.register_blueprint(api, url_prefix='/api')


@app.route('/status')
def status():
    """Health check endpoint"""
    from verify import SUITES
    return jsonify({
        "status": "running",
        "max_strands": app.config['MAX_STRANDS'],
        "suites": list(SUITES),
        "auth": "required" if app.config.get('API_KEY') else "open",
    })
