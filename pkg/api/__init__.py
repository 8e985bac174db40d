from flask import Blueprint
from flask_limiter import Limiter
from flask_limiter.util import get_remote_address

from config import Config

api = Blueprint('api', __name__)
limiter = Limiter(get_remote_address, default_limits=Config.RATE_LIMITS)

from . import routes  # noqa: E402,F401
