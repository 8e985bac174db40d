from app import app, logger
from config import Config

if __name__ == "__main__":
    try:
        logger.info(f"Starting Flask server on port {Config.PORT}")
        app.run(host="0.0.0.0", port=Config.PORT, debug=False)
    except Exception as e:
        logger.error(f"Failed to start server: {str(e)}")
        raise
