"""Contract tests package."""