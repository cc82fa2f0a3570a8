import logging
import os
import sys
from datetime import datetime


def setup_logger(log_dir="logs", verbose=False):
    """ロガーの設定"""
    # ログディレクトリを作成
    if not os.path.exists(log_dir):
        os.makedirs(log_dir)

    # ログファイル名（日付付き）
    log_file = os.path.join(log_dir, f"blocksum_{datetime.now().strftime('%Y%m%d')}.log")

    handlers = [logging.FileHandler(log_file, encoding='utf-8')]
    if verbose:
        # 詳細モードでは標準エラーにも出力
        handlers.append(logging.StreamHandler(sys.stderr))

    logging.basicConfig(
        level=logging.DEBUG if verbose else logging.INFO,
        format='%(asctime)s - %(name)s - %(levelname)s - %(message)s',
        handlers=handlers,
    )

    return logging.getLogger(__name__)
