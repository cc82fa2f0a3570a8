# -*- coding: utf-8 -*-
"""設定の読み込み（フラグ > 環境変数 > settings.json > 既定値）"""

import json
import logging
import os

logger = logging.getLogger(__name__)

SETTINGS_FILE = "settings.json"

DEFAULT_SETTINGS = {
    "cache_dir": os.path.join(os.path.expanduser("~"), ".blocksum", "oeis"),
    "log_dir": "logs",
    "chunk_size": 2 ** 16,
    "jobs": 1,
    "bins": 100,
    "plot_columns": 1000,
    "plot_point_limit": 10 ** 5,
    "allow_network": True,
    "timeout": 30.0,
}

# 環境変数による上書き
ENV_OVERRIDES = {
    "cache_dir": "BLOCKSUM_CACHE_DIR",
    "log_dir": "BLOCKSUM_LOG_DIR",
}


def settings_path():
    """設定ファイルのパス"""
    return os.environ.get("BLOCKSUM_SETTINGS", SETTINGS_FILE)


def load_settings(path=None):
    """設定を読み込み"""
    path = path or settings_path()
    settings = dict(DEFAULT_SETTINGS)

    try:
        with open(path, 'r', encoding='utf-8') as f:
            stored = json.load(f)
        if isinstance(stored, dict):
            settings.update({k: v for k, v in stored.items() if k in DEFAULT_SETTINGS})
        else:
            logger.warning(f"設定ファイル {path} の形式が不正です。既定値を使用します")
    except FileNotFoundError:
        pass
    except (json.JSONDecodeError, OSError) as e:
        logger.warning(f"設定ファイル {path} を読み込めません: {e}")

    for key, env_name in ENV_OVERRIDES.items():
        value = os.environ.get(env_name)
        if value:
            settings[key] = value

    return settings
