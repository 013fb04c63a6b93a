#!/usr/bin/env python3
"""
Smoke script for the complexity API endpoints.
Run this after starting the Django server (and optionally `manage.py seed_tables`).
"""

import requests

BASE_URL = "http://localhost:8000/api"
EXAMPLE = "0011011101110110"


def smoke_api():
    print("🧪 Smoke-testing the complexity API...")

    # 1: Complexity of the worked example
    print("\n1. Testing complexity endpoint...")
    try:
        response = requests.post(f"{BASE_URL}/complexity/", json={"sequence": EXAMPLE, "alphabet": "01"})
        print(f"   Status: {response.status_code}")
        if response.status_code == 200:
            data = response.json()
            print(f"   ✅ c = {data['complexity']}, exact = {data['exact']}")
            print(f"   Components: {'|'.join(data['components'])}")
        else:
            print(f"   Response: {response.text}")
    except Exception as e:
        print(f"   ❌ Error: {e}")
        return

    # 2: Randomness test of an all-zeros sequence
    print("\n2. Testing randomness endpoint...")
    try:
        response = requests.post(f"{BASE_URL}/test/", json={"sequence": "0" * 16})
        print(f"   Status: {response.status_code}")
        if response.status_code == 200:
            data = response.json()
            print(f"   ✅ in critical set: {data['in_critical_set']}, significance: {data['significance']}")
        else:
            print(f"   Response: {response.text}")
    except Exception as e:
        print(f"   ❌ Error: {e}")

    # 3: Identity verification on a small range
    print("\n3. Testing verify endpoint...")
    try:
        response = requests.post(f"{BASE_URL}/verify/", json={"alphabet_size": 2, "n_max": 6})
        print(f"   Status: {response.status_code}")
        if response.status_code == 200:
            data = response.json()
            print(f"   ✅ passed: {data['passed']}")
            for result in data['identity_results']:
                print(f"   - {result['name']}: {'pass' if result['passed'] else 'fail'}")
        else:
            print(f"   Response: {response.text}")
    except Exception as e:
        print(f"   ❌ Error: {e}")

    # 4: Stored tables
    print("\n4. Testing table listing...")
    try:
        response = requests.get(f"{BASE_URL}/tables/")
        print(f"   Status: {response.status_code}")
        if response.status_code == 200:
            data = response.json()
            print(f"   Found {data.get('count', 0)} stored tables")
        else:
            print(f"   Response: {response.text}")
    except Exception as e:
        print(f"   ❌ Error: {e}")

    print("\n🎉 API smoke test completed!")


if __name__ == "__main__":
    smoke_api()
